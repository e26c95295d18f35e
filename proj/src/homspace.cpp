#include "webcat/homspace.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace webcat {

namespace {

/// All nonnegative t x u matrices with the given row and column sums.
void gen_tables(int row, const std::vector<int>& rows, std::vector<int> cols,
                std::vector<std::vector<int>>& cur,
                std::vector<std::vector<std::vector<int>>>& out) {
    int t = static_cast<int>(rows.size());
    int u = static_cast<int>(cols.size());
    if (row == t) {
        for (int j = 0; j < u; ++j)
            if (cols[j] != 0) return;
        out.push_back(cur);
        return;
    }
    // Fill row `row` with sum rows[row], bounded by the remaining column sums.
    std::vector<int> entry(u, 0);
    std::function<void(int, int)> fill = [&](int j, int remaining) {
        if (j == u) {
            if (remaining != 0) return;
            cur.push_back(entry);
            std::vector<int> saved = cols;
            for (int k = 0; k < u; ++k) cols[k] -= entry[k];
            gen_tables(row + 1, rows, cols, cur, out);
            cols = saved;
            cur.pop_back();
            return;
        }
        for (int v = 0; v <= std::min(remaining, cols[j]); ++v) {
            entry[j] = v;
            fill(j + 1, remaining - v);
        }
        entry[j] = 0;
    };
    fill(0, rows[row]);
}

/// All symmetric 0/1 matrices with zero diagonal and row sums <= bound.
void gen_sym01(int i, int j, int k, std::vector<std::vector<int>>& m,
               const std::vector<int>& bound, std::vector<int>& rowsum,
               std::vector<std::vector<std::vector<int>>>& out) {
    if (i == k) {
        out.push_back(m);
        return;
    }
    if (j == k) {
        gen_sym01(i + 1, i + 2, k, m, bound, rowsum, out);
        return;
    }
    gen_sym01(i, j + 1, k, m, bound, rowsum, out);
    if (rowsum[i] + 1 <= bound[i] && rowsum[j] + 1 <= bound[j]) {
        m[i][j] = m[j][i] = 1;
        rowsum[i]++;
        rowsum[j]++;
        gen_sym01(i, j + 1, k, m, bound, rowsum, out);
        rowsum[i]--;
        rowsum[j]--;
        m[i][j] = m[j][i] = 0;
    }
}

}  // namespace

std::vector<ChiTuple> enumerate_chi(const std::vector<int>& a, const std::vector<int>& b) {
    for (int v : a)
        if (v < 0) throw std::invalid_argument("enumerate_chi: negative label");
    for (int v : b)
        if (v < 0) throw std::invalid_argument("enumerate_chi: negative label");
    int t = static_cast<int>(a.size());
    int u = static_cast<int>(b.size());
    std::vector<ChiTuple> out;

    std::vector<std::vector<std::vector<int>>> As;
    {
        std::vector<std::vector<int>> m(t, std::vector<int>(t, 0));
        std::vector<int> rowsum(t, 0);
        gen_sym01(0, 1, t, m, a, rowsum, As);
    }
    std::vector<std::vector<std::vector<int>>> Bs;
    {
        std::vector<std::vector<int>> m(u, std::vector<int>(u, 0));
        std::vector<int> rowsum(u, 0);
        gen_sym01(0, 1, u, m, b, rowsum, Bs);
    }

    for (const auto& A : As) {
        // Enumerate D given A.
        std::vector<int> slack(t);
        for (int i = 0; i < t; ++i) {
            slack[i] = a[i];
            for (int j = 0; j < t; ++j) slack[i] -= A[i][j];
        }
        for (long dbits = 0; dbits < (1L << t); ++dbits) {
            std::vector<int> D(t, 0);
            bool ok = true;
            std::vector<int> rows(t);
            for (int i = 0; i < t; ++i) {
                D[i] = (dbits >> i) & 1;
                rows[i] = slack[i] - 2 * D[i];
                if (rows[i] < 0) ok = false;
            }
            if (!ok) continue;
            long rsum = std::accumulate(rows.begin(), rows.end(), 0L);
            for (const auto& B : Bs) {
                std::vector<int> cols(u);
                bool okb = true;
                long csum = 0;
                for (int j = 0; j < u; ++j) {
                    cols[j] = b[j];
                    for (int i = 0; i < u; ++i) cols[j] -= B[i][j];
                    if (cols[j] < 0) okb = false;
                    csum += cols[j];
                }
                if (!okb || rsum != csum) continue;
                std::vector<std::vector<std::vector<int>>> Cs;
                std::vector<std::vector<int>> cur;
                gen_tables(0, rows, cols, cur, Cs);
                for (auto& C : Cs) {
                    ChiTuple chi;
                    chi.A = A;
                    chi.B = B;
                    chi.C = std::move(C);
                    chi.D = D;
                    chi.dom = a;
                    chi.cod = b;
                    out.push_back(std::move(chi));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long hom_dim(const std::vector<int>& a, const std::vector<int>& b) {
    return static_cast<long>(enumerate_chi(a, b).size());
}

HomBasis hom_basis(const std::vector<int>& a, const std::vector<int>& b) {
    HomBasis out;
    out.dom = a;
    out.cod = b;
    out.tuples = enumerate_chi(a, b);
    out.terms.reserve(out.tuples.size());
    for (const auto& chi : out.tuples) out.terms.push_back(xi_term(chi));
    return out;
}

namespace {

using Row = std::vector<BigInt>;

/// Flattens the maps into integer rows over the union of nonzero positions,
/// clearing denominators row by row.
std::vector<Row> integer_rows(const std::vector<LinearMap>& maps) {
    std::map<std::pair<Monomial, Monomial>, size_t> col_of;
    for (const auto& f : maps)
        for (const auto& [m, v] : f.cols)
            for (const auto& [m2, c] : v.terms) {
                auto key = std::make_pair(m, m2);
                if (!col_of.count(key)) {
                    size_t next = col_of.size();
                    col_of.emplace(key, next);
                }
            }
    std::vector<Row> rows;
    rows.reserve(maps.size());
    for (const auto& f : maps) {
        BigInt lcm = 1;
        for (const auto& [m, v] : f.cols)
            for (const auto& [m2, c] : v.terms) {
                BigInt d = c.denominator();
                lcm = boost::multiprecision::lcm(lcm, d);
            }
        Row row(col_of.size(), BigInt(0));
        for (const auto& [m, v] : f.cols)
            for (const auto& [m2, c] : v.terms)
                row[col_of.at({m, m2})] = c.numerator() * (lcm / c.denominator());
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Fraction-free (Bareiss) elimination rank of an integer matrix.
long bareiss_rank(std::vector<Row>& m) {
    if (m.empty()) return 0;
    size_t cols = m[0].size();
    size_t rank = 0;
    BigInt prev = 1;
    for (size_t col = 0; col < cols && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t i = rank + 1; i < m.size(); ++i) {
            for (size_t j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<long>(rank);
}

}  // namespace

long gram_rank(const std::vector<LinearMap>& maps) {
    if (maps.empty()) return 0;
    for (const auto& f : maps)
        if (f.dom != maps[0].dom || f.cod != maps[0].cod || f.n != maps[0].n)
            throw std::invalid_argument("gram_rank: maps must share dom, cod and n");
    auto rows = integer_rows(maps);
    return bareiss_rank(rows);
}

Decomposition decompose(const Morphism& m_in) {
    Morphism m = m_in;
    if (m.flavor() == Flavor::Oriented) m = mix_to_up(m);
    if (m.flavor() == Flavor::Brauer) m = brauer_embed(m);
    std::vector<int> a = m.dom().labels;
    std::vector<int> b = m.cod().labels;
    for (int& v : a)
        if (v < 0) throw std::logic_error("decompose: transport left a downward strand");
    for (int& v : b)
        if (v < 0) throw std::logic_error("decompose: transport left a downward strand");

    HomBasis basis = hom_basis(a, b);
    int n = faithful_n(m.dom(), m.cod());
    LinearMap target = eval(m, n);

    std::vector<LinearMap> xs;
    xs.reserve(basis.terms.size());
    for (const auto& t : basis.terms) xs.push_back(eval(Morphism(t), n));

    // Assemble the linear system over the union of nonzero positions.
    std::map<std::pair<Monomial, Monomial>, size_t> row_of;
    auto note = [&](const LinearMap& f) {
        for (const auto& [m1, v] : f.cols)
            for (const auto& [m2, c] : v.terms) {
                auto key = std::make_pair(m1, m2);
                if (!row_of.count(key)) {
                    size_t next = row_of.size();
                    row_of.emplace(key, next);
                }
            }
    };
    for (const auto& f : xs) note(f);
    note(target);

    size_t k = xs.size();
    size_t rows = row_of.size();
    std::vector<std::vector<Scalar>> M(rows, std::vector<Scalar>(k + 1, Scalar(0)));
    for (size_t i = 0; i < k; ++i)
        for (const auto& [m1, v] : xs[i].cols)
            for (const auto& [m2, c] : v.terms) M[row_of.at({m1, m2})][i] = c;
    for (const auto& [m1, v] : target.cols)
        for (const auto& [m2, c] : v.terms) M[row_of.at({m1, m2})][k] = c;

    // Rational Gaussian elimination with partial pivoting by column.
    size_t rank = 0;
    std::vector<long> pivot_col(k, -1);
    for (size_t col = 0; col < k && rank < rows; ++col) {
        size_t p = rank;
        while (p < rows && M[p][col].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(M[rank], M[p]);
        Scalar inv = M[rank][col].inverse();
        for (size_t j = col; j <= k; ++j) M[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][col].is_zero()) continue;
            Scalar f = M[i][col];
            for (size_t j = col; j <= k; ++j) M[i][j] -= f * M[rank][j];
        }
        pivot_col[col] = static_cast<long>(rank);
        ++rank;
    }
    for (size_t i = rank; i < rows; ++i)
        if (!M[i][k].is_zero())
            throw std::runtime_error(
                "decompose: inconsistent linear system; this indicates an internal bug");
    Decomposition out;
    out.coefficients.assign(k, Scalar(0));
    for (size_t col = 0; col < k; ++col) {
        if (pivot_col[col] < 0)
            throw std::runtime_error(
                "decompose: basis evaluations are not independent; internal bug");
        out.coefficients[col] = M[static_cast<size_t>(pivot_col[col])][k];
    }

    // Verify the reconstruction exactly.
    LinearMap recon;
    recon.dom = target.dom;
    recon.cod = target.cod;
    recon.n = n;
    recon.parity = target.parity;
    for (size_t i = 0; i < k; ++i) {
        if (out.coefficients[i].is_zero()) continue;
        LinearMap scaled = xs[i].scaled(out.coefficients[i]);
        scaled.dom = recon.dom;
        scaled.cod = recon.cod;
        scaled.parity = recon.parity;
        recon += scaled;
    }
    out.residual_zero = recon == target;
    if (!out.residual_zero)
        throw std::runtime_error("decompose: reconstruction failed; internal bug");
    return out;
}

}  // namespace webcat
