#pragma once

#include <string>
#include <vector>

#include "rbd/bigint.hpp"
#include "rbd/errors.hpp"

namespace rbd {

// Diagonal lattice <1>^p (+) n<-1> with p in {0,1}.  Basis order is fixed:
// H first when present, then E1..En; blow-ups append at the end.
class BlowupLattice {
public:
    BlowupLattice(int positive_rank, int negative_rank);

    int positive_rank() const { return positive_; }
    int negative_rank() const { return negative_; }
    int rank() const { return positive_ + negative_; }

    // +1 or -1, the self-pairing of basis vector i.
    int sign(int i) const;

    // "H", "E1", "E2", ... (or "E1".. when there is no positive part).
    std::string basis_label(int i) const;

    BlowupLattice blow_up() const { return BlowupLattice(positive_, negative_ + 1); }

    friend bool operator==(const BlowupLattice&, const BlowupLattice&) = default;

private:
    int positive_;
    int negative_;
};

// Integer class written in the fixed basis of a BlowupLattice.
class HomologyClass {
public:
    HomologyClass(BlowupLattice lattice, std::vector<Int> coefficients);

    const BlowupLattice& lattice() const { return lattice_; }
    const std::vector<Int>& coefficients() const { return coeffs_; }
    const Int& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    int rank() const { return lattice_.rank(); }

    HomologyClass operator+(const HomologyClass& other) const;
    HomologyClass operator-(const HomologyClass& other) const;
    HomologyClass operator-() const;
    HomologyClass scaled(const Int& c) const;

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;

    std::string to_string() const;

private:
    BlowupLattice lattice_;
    std::vector<Int> coeffs_;
};

// Intersection pairing: sum of eps_i * x_i * y_i over the diagonal signs.
Int pair(const HomologyClass& x, const HomologyClass& y);
Int square(const HomologyClass& x);

// K is characteristic iff K.x == x.x (mod 2) for every basis class x.
// Over a diagonal unimodular lattice this is "every coefficient odd".
bool is_characteristic(const HomologyClass& K);

// Symmetric integer bilinear form given by its Gram matrix.
class SymmetricForm {
public:
    explicit SymmetricForm(std::vector<std::vector<Int>> entries);

    int size() const { return n_; }
    const Int& at(int i, int j) const { return entries_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const std::vector<std::vector<Int>>& entries() const { return entries_; }

    friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;

private:
    int n_;
    std::vector<std::vector<Int>> entries_;
};

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct SignatureStats {
    int b_plus = 0;
    int b_minus = 0;
    int b_zero = 0;
    Parity parity = Parity::odd;
};

// Exact inertia counts via symmetric congruence diagonalization over Q.
// Parity is even iff every diagonal self-pairing is even.
SignatureStats signature_stats(const SymmetricForm& q);

// Divisor chain d1 | d2 | ... | dn of the Smith normal form, all >= 0,
// zeros (if any) at the end.  Product of the nonzero entries is |det|.
std::vector<Int> smith_normal_form(const SymmetricForm& q);

// Fraction-free (Bareiss) determinant.
Int determinant(const SymmetricForm& q);

// Solve q * x = v exactly over the rationals; throws DomainError if singular.
std::vector<Rat> solve(const SymmetricForm& q, const std::vector<Rat>& v);

// v^T q^{-1} v: the self-pairing of a class known only through its
// evaluations v_i against a spanning family with Gram matrix q.
Rat restriction_square(const SymmetricForm& q, const std::vector<Int>& evaluations);

} // namespace rbd
