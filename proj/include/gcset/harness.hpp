#pragma once

#include "gcset/batch.hpp"
#include "gcset/curves.hpp"
#include "gcset/lines.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gcset {

enum class CheckStatus { pass, fail, vacuous };

std::string to_string(CheckStatus s);

// One checked sub-statement of a numbered claim. Reports are deterministic
// functions of their inputs; a fail always carries a witness.
struct VerificationReport {
    std::string claim_id;  // e.g. "Thm2.1.ii", "Cor3.4.i"
    std::string subject;   // which set / node / triplet the check ran on
    CheckStatus status = CheckStatus::vacuous;
    std::string details;
    std::optional<std::string> witness;  // serialized set + offending objects
};

// Shared read-only analysis of one node set, computed once and consumed by
// the individual checkers and by the CLI.
struct SetAnalysis {
    bool correct = false;
    bool gc = false;
    SetClass cls = SetClass::NotCorrect;
    std::vector<BivariatePoly> fundamentals;              // per node; empty unless correct
    std::vector<LineCensusEntry> census;
    std::vector<std::vector<size_t>> usage;               // per census line; empty unless correct
    std::vector<LinearForm> maximal;                      // empty unless correct
    std::optional<std::vector<SpecialTriplet>> triplets;  // exhaustive scan, when gated in
};

// The exhaustive special-triplet scan is gated to sets of at most this many
// nodes; larger sets fall back to the used-2-node-line route.
inline constexpr size_t kExhaustiveTripletLimit = 28;

SetAnalysis analyze_set(const NodeSet& x, Exec exec = Exec::parallel,
                        bool with_triplet_scan = false);

// Both directions of the single-triplet characterization against a maximal
// curve mu: detection must agree with statements (i)+(ii), and a detected
// triplet must satisfy (iii)-(vii). Emits Thm2.1.equiv and Thm2.1.i-vii.
// The set must be n-correct (callers run this per candidate and are
// expected to have checked once).
std::vector<VerificationReport> verify_special_triplet_characterization(
    const NodeSet& x, const CurveWitness& mu, const Point& a, const Point& b, const Point& c,
    const std::string& subject);

// Runs the peel and maps any violated sub-statement to Thm2.2.i-vi.
std::vector<VerificationReport> verify_multi_triplet_decomposition(
    const NodeSet& x, const CurveWitness& mu, const Point& b,
    const std::vector<SpecialTriplet>& triplets, const std::string& subject);

// Distinctness of the triplets behind the used 2-node lines through b
// (Prop3.3), the two-line corollary (Cor3.2.i-iv per pair), and the
// collinearity of b with the using nodes (Thm3.1.*).
std::vector<VerificationReport> verify_collinearity(const NodeSet& x, const Point& b,
                                                    const std::string& subject);

// At most n special triplets (Cor3.4.i) and, on GC sets, at most n used
// 2-node lines with the Carnicer-Gasca consequence at the bound (Cor3.4.ii).
std::vector<VerificationReport> verify_usage_bound(const NodeSet& x, const Point& b,
                                                   const std::string& subject);

// The conditional GC_6 statement (Cor3.5); vacuous unless the set is GC_6
// with no maximal line and three used 2-node lines through a common node.
std::vector<VerificationReport> verify_gc6_corollary(const NodeSet& x, const std::string& subject);

struct SuiteTarget {
    std::string label;
    NodeSet set;
    std::optional<Point> distinguished;
};

// Runs the requested suites ("usage-bound", "collinearity", "peel", "gc6",
// or "all") over every target and every node, returning reports merged
// deterministically by claim id, then subject.
std::vector<VerificationReport> run_suite(const std::vector<SuiteTarget>& targets,
                                          const std::vector<std::string>& suites,
                                          std::uint64_t seed);

}  // namespace gcset
