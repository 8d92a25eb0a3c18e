#include "rbd/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace rbd {

BlowupLattice::BlowupLattice(int positive_rank, int negative_rank)
    : positive_(positive_rank), negative_(negative_rank) {
    if (positive_ != 0 && positive_ != 1)
        throw DomainError("positive rank must be 0 or 1");
    if (negative_ < 0)
        throw DomainError("negative rank must be >= 0");
}

int BlowupLattice::sign(int i) const {
    if (i < 0 || i >= rank()) throw DimensionError("basis index out of range");
    return i < positive_ ? +1 : -1;
}

std::string BlowupLattice::basis_label(int i) const {
    if (i < 0 || i >= rank()) throw DimensionError("basis index out of range");
    if (i < positive_) return "H";
    return "E" + std::to_string(i - positive_ + 1);
}

HomologyClass::HomologyClass(BlowupLattice lattice, std::vector<Int> coefficients)
    : lattice_(lattice), coeffs_(std::move(coefficients)) {
    if (static_cast<int>(coeffs_.size()) != lattice_.rank())
        throw DimensionError("coefficient length does not match lattice rank");
}

static void require_same_lattice(const HomologyClass& x, const HomologyClass& y) {
    if (!(x.lattice() == y.lattice()))
        throw DimensionError("classes live over different lattices");
}

HomologyClass HomologyClass::operator+(const HomologyClass& other) const {
    require_same_lattice(*this, other);
    std::vector<Int> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
    return HomologyClass(lattice_, std::move(c));
}

HomologyClass HomologyClass::operator-(const HomologyClass& other) const {
    require_same_lattice(*this, other);
    std::vector<Int> c(coeffs_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_[i];
    return HomologyClass(lattice_, std::move(c));
}

HomologyClass HomologyClass::operator-() const {
    std::vector<Int> c(coeffs_);
    for (auto& v : c) v = -v;
    return HomologyClass(lattice_, std::move(c));
}

HomologyClass HomologyClass::scaled(const Int& k) const {
    std::vector<Int> c(coeffs_);
    for (auto& v : c) v *= k;
    return HomologyClass(lattice_, std::move(c));
}

std::string HomologyClass::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].get_str();
    }
    os << "]";
    return os.str();
}

Int pair(const HomologyClass& x, const HomologyClass& y) {
    require_same_lattice(x, y);
    Int acc = 0;
    const int p = x.lattice().positive_rank();
    const int n = x.lattice().rank();
    for (int i = 0; i < n; ++i) {
        Int term = x[i] * y[i];
        if (i < p)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

Int square(const HomologyClass& x) { return pair(x, x); }

bool is_characteristic(const HomologyClass& K) {
    // K.e_i == e_i.e_i == +-1 (mod 2) for each basis vector, i.e. all odd.
    for (const Int& c : K.coefficients())
        if (!is_odd(c)) return false;
    return true;
}

SymmetricForm::SymmetricForm(std::vector<std::vector<Int>> entries)
    : n_(static_cast<int>(entries.size())), entries_(std::move(entries)) {
    for (const auto& row : entries_)
        if (static_cast<int>(row.size()) != n_)
            throw DimensionError("form matrix is not square");
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (at(i, j) != at(j, i))
                throw DomainError("form matrix is not symmetric");
}

SignatureStats signature_stats(const SymmetricForm& q) {
    const int n = q.size();
    SignatureStats stats;

    stats.parity = Parity::even;
    for (int i = 0; i < n; ++i)
        if (is_odd(q.at(i, i))) {
            stats.parity = Parity::odd;
            break;
        }

    // Congruence diagonalization over Q.  Row/column operations are applied
    // symmetrically, so diagonal signs give the inertia.
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(q.at(i, j));

    auto row = [&](int i) -> std::vector<Rat>& { return m[static_cast<size_t>(i)]; };

    for (int k = 0; k < n; ++k) {
        if (row(k)[static_cast<size_t>(k)] == 0) {
            int pivot = -1;
            for (int j = k + 1; j < n; ++j)
                if (row(j)[static_cast<size_t>(j)] != 0) { pivot = j; break; }
            if (pivot >= 0) {
                std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pivot)]);
                for (int i = 0; i < n; ++i)
                    std::swap(row(i)[static_cast<size_t>(k)], row(i)[static_cast<size_t>(pivot)]);
            } else {
                // Diagonal is all zero from here; grab an off-diagonal entry.
                int j_off = -1;
                for (int i = k; i < n && j_off < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (row(i)[static_cast<size_t>(j)] != 0) {
                            if (i != k) {
                                std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(i)]);
                                for (int t = 0; t < n; ++t)
                                    std::swap(row(t)[static_cast<size_t>(k)], row(t)[static_cast<size_t>(i)]);
                            }
                            j_off = j;
                            break;
                        }
                if (j_off < 0) {
                    stats.b_zero += n - k;
                    break;
                }
                // m[k][k]==0, m[k][j]!=0, m[j][j]==0: adding row/col j to k
                // makes the pivot 2*m[k][j] != 0.
                for (int t = 0; t < n; ++t) row(k)[static_cast<size_t>(t)] += row(j_off)[static_cast<size_t>(t)];
                for (int t = 0; t < n; ++t) row(t)[static_cast<size_t>(k)] += row(t)[static_cast<size_t>(j_off)];
            }
        }
        Rat piv = row(k)[static_cast<size_t>(k)];
        if (piv == 0) { stats.b_zero += 1; continue; }
        if (piv > 0) stats.b_plus += 1; else stats.b_minus += 1;
        for (int i = k + 1; i < n; ++i) {
            if (row(i)[static_cast<size_t>(k)] == 0) continue;
            Rat f = row(i)[static_cast<size_t>(k)] / piv;
            for (int t = 0; t < n; ++t) row(i)[static_cast<size_t>(t)] -= f * row(k)[static_cast<size_t>(t)];
            for (int t = 0; t < n; ++t) row(t)[static_cast<size_t>(i)] -= f * row(t)[static_cast<size_t>(k)];
        }
    }
    return stats;
}

std::vector<Int> smith_normal_form(const SymmetricForm& q) {
    const int n = q.size();
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.at(i, j);

    auto a = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; };

    for (int t = 0; t < n; ++t) {
        // Pick the entry of least nonzero absolute value in the trailing block.
        int pi = -1, pj = -1;
        for (int i = t; i < n; ++i)
            for (int j = t; j < n; ++j)
                if (a(i, j) != 0 &&
                    (pi < 0 || int_abs(a(i, j)) < int_abs(a(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break; // trailing block is zero
        std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(pi)]);
        for (int i = 0; i < n; ++i) std::swap(a(i, t), a(i, pj));

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                Int f = a(i, t) / a(t, t); // truncated quotient is fine here
                for (int j = t; j < n; ++j) a(i, j) -= f * a(t, j);
                if (a(i, t) != 0) {
                    // Remainder is smaller than the pivot: swap up and restart.
                    std::swap(m[static_cast<size_t>(t)], m[static_cast<size_t>(i)]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int f = a(t, j) / a(t, t);
                for (int i = t; i < n; ++i) a(i, j) -= f * a(i, t);
                if (a(t, j) != 0) {
                    for (int i = 0; i < n; ++i) std::swap(a(i, t), a(i, j));
                    clean = false;
                }
            }
            if (clean) {
                // Pivot must divide everything that remains.
                for (int i = t + 1; i < n && clean; ++i)
                    for (int j = t + 1; j < n && clean; ++j)
                        if (!divides(a(t, t), a(i, j))) {
                            for (int jj = t; jj < n; ++jj) a(t, jj) += a(i, jj);
                            clean = false;
                        }
            }
        }
    }

    std::vector<Int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = int_abs(a(i, i));
    // Zeros sort to the back; everything else is already a divisor chain.
    std::stable_partition(d.begin(), d.end(), [](const Int& v) { return v != 0; });
    return d;
}

Int determinant(const SymmetricForm& q) {
    const int n = q.size();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<size_t>(i)][static_cast<size_t>(j)] = q.at(i, j);

    auto a = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i)][static_cast<size_t>(j)]; };

    // Bareiss: every division below is exact, intermediate values stay small.
    Int denom = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = num / denom;
            }
        denom = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::vector<Rat> solve(const SymmetricForm& q, const std::vector<Rat>& v) {
    const int n = q.size();
    if (static_cast<int>(v.size()) != n)
        throw DimensionError("right-hand side length does not match form size");
    std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n) + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(q.at(i, j));
        m[static_cast<size_t>(i)][static_cast<size_t>(n)] = v[static_cast<size_t>(i)];
    }
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { pivot = i; break; }
        if (pivot < 0) throw DomainError("form is singular");
        std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(pivot)]);
        for (int i = 0; i < n; ++i) {
            if (i == k || m[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
            Rat f = m[static_cast<size_t>(i)][static_cast<size_t>(k)] / m[static_cast<size_t>(k)][static_cast<size_t>(k)];
            for (int j = k; j <= n; ++j)
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * m[static_cast<size_t>(k)][static_cast<size_t>(j)];
        }
    }
    std::vector<Rat> x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        x[static_cast<size_t>(i)] = m[static_cast<size_t>(i)][static_cast<size_t>(n)] / m[static_cast<size_t>(i)][static_cast<size_t>(i)];
    return x;
}

Rat restriction_square(const SymmetricForm& q, const std::vector<Int>& evaluations) {
    std::vector<Rat> v(evaluations.size());
    for (size_t i = 0; i < evaluations.size(); ++i) v[i] = Rat(evaluations[i]);
    std::vector<Rat> x = solve(q, v);
    Rat acc = 0;
    for (size_t i = 0; i < v.size(); ++i) acc += v[i] * x[i];
    return acc;
}

} // namespace rbd
