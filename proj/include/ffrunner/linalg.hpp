#pragma once

#include "ffrunner/gf.hpp"

#include <vector>

namespace ffr {

// Dense row-major matrix over one field. Everything here is desk scale;
// dimensions stay in the dozens.
struct Mat {
    Field field;
    int rows = 0;
    int cols = 0;
    std::vector<Elem> a;

    Mat(Field f, int r, int c) : field(std::move(f)), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    Elem& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    Elem at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// In-place reduced row echelon form; returns the rank. Pivot columns are
// strictly increasing and pivot entries are 1 with zeros above and below.
int rref(Mat& m);

// RREF-canonical basis of the right kernel {x : m x = 0}; one row per basis
// vector, rows = nullity.
Mat nullspace(const Mat& m);

// Subspace of F_q^ambient held by its canonical RREF basis: equal subspaces
// have identical representations, so equality is row-word comparison.
class Subspace {
  public:
    static Subspace span_of(Mat rows);
    static Subspace zero(Field field, int ambient);
    static Subspace full(Field field, int ambient);

    const Field& field() const { return field_; }
    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows; }
    int codim() const { return ambient_ - basis_.rows; }
    const Mat& basis() const { return basis_; }
    std::vector<Elem> basis_row(int r) const;

    // Orthogonal complement under the standard dot product. An involution:
    // perp(perp(V)) == V.
    Subspace perp() const;

    bool contains(const std::vector<Elem>& v) const;
    bool contains(const Subspace& other) const;

    // Stable flat key (ambient, dim, rows) for grouping by subspace.
    std::vector<Elem> key() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_.rows == b.basis_.rows && a.basis_.a == b.basis_.a;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  private:
    Subspace(Field field, int ambient, Mat basis);
    Field field_;
    int ambient_;
    Mat basis_;
};

// dim(a intersect b), computed through the complement: (a ^ b)^perp is the
// sum of the two perps.
int intersection_dim(const Subspace& a, const Subspace& b);

}  // namespace ffr
