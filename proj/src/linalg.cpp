#include "gcset/linalg.hpp"

#include <stdexcept>

namespace gcset {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

namespace {

Elimination eliminate_impl(const RationalMatrix& m, const std::vector<Rat>* rhs) {
    const int rows = m.rows();
    const int cols = m.cols();
    const int all_cols = rhs ? cols + 1 : cols;
    if (rhs && static_cast<int>(rhs->size()) != rows)
        throw std::invalid_argument("rhs length does not match row count");

    // Clear denominators row by row; det(m) = sign * last_pivot / prod(scales).
    std::vector<std::vector<Int>> z(rows, std::vector<Int>(all_cols));
    Int scale_product(1);
    for (int r = 0; r < rows; ++r) {
        Int lcm(1);
        for (int c = 0; c < cols; ++c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).get_den_mpz_t());
        if (rhs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), (*rhs)[r].get_den_mpz_t());
        for (int c = 0; c < cols; ++c) {
            Rat scaled = m.at(r, c) * Rat(lcm);
            z[r][c] = scaled.get_num();
        }
        if (rhs) {
            Rat scaled = (*rhs)[r] * Rat(lcm);
            z[r][cols] = scaled.get_num();
        }
        scale_product *= lcm;
    }

    // Forward pass: one-step fraction-free elimination. Pivot = first row
    // with a nonzero entry in the leftmost unresolved column.
    std::vector<int> pivot_cols;
    Int prev(1);
    int sign_swaps = 1;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r) {
            if (sgn(z[r][col]) != 0) {
                p = r;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row) {
            std::swap(z[p], z[row]);
            sign_swaps = -sign_swaps;
        }
        const Int pivot = z[row][col];
        for (int r = row + 1; r < rows; ++r) {
            const Int factor = z[r][col];
            for (int c = col + 1; c < all_cols; ++c) {
                Int num = z[r][c] * pivot - factor * z[row][c];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (sgn(rem) != 0) throw std::logic_error("fraction-free elimination lost exactness");
                z[r][c] = q;
            }
            z[r][col] = 0;
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++row;
    }

    Elimination out;
    out.rank = static_cast<int>(pivot_cols.size());

    if (rows == cols) {
        if (out.rank < rows) {
            out.determinant = Rat(0);
        } else {
            Rat det(prev * sign_swaps, scale_product);
            det.canonicalize();
            out.determinant = det;
        }
    }

    if (rhs) {
        for (int r = out.rank; r < rows; ++r)
            if (sgn(z[r][cols]) != 0) throw std::domain_error("inconsistent system");
    }

    // Backward pass over the pivot rows: reduced echelon form over Q.
    const int r = out.rank;
    std::vector<std::vector<Rat>> red(r, std::vector<Rat>(all_cols));
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < all_cols; ++c) red[i][c] = Rat(z[i][c]);
    for (int i = r - 1; i >= 0; --i) {
        Rat inv = 1 / red[i][pivot_cols[i]];
        for (int c = 0; c < all_cols; ++c) red[i][c] *= inv;
        for (int u = 0; u < i; ++u) {
            Rat factor = red[u][pivot_cols[i]];
            if (sign(factor) == 0) continue;
            for (int c = 0; c < all_cols; ++c) red[u][c] -= factor * red[i][c];
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_cols) is_pivot[c] = true;

    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < r; ++i) v[pivot_cols[i]] = -red[i][f];
        out.nullspace.push_back(std::move(v));
    }

    if (rhs) {
        std::vector<Rat> sol(cols, Rat(0));
        for (int i = 0; i < r; ++i) sol[pivot_cols[i]] = red[i][cols];
        out.solution = std::move(sol);
    }
    return out;
}

}  // namespace

Elimination eliminate(const RationalMatrix& m) { return eliminate_impl(m, nullptr); }

Elimination eliminate(const RationalMatrix& m, const std::vector<Rat>& rhs) {
    return eliminate_impl(m, &rhs);
}

}  // namespace gcset
