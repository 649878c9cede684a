#include "ffrunner/linalg.hpp"

namespace ffr {

int rref(Mat& m) {
    const Field& k = m.field;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        Elem inv = k.inv(m.at(rank, col));
        if (inv != 1)
            for (int c = 0; c < m.cols; ++c) m.at(rank, c) = k.mul(m.at(rank, c), inv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            Elem f = m.at(r, col);
            if (f == 0) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = k.sub(m.at(r, c), k.mul(f, m.at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

Mat nullspace(const Mat& m) {
    const Field& k = m.field;
    Mat red = m;
    int rank = rref(red);
    std::vector<int> pivot_col(static_cast<std::size_t>(rank));
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int r = 0, c = 0; r < rank; ++r) {
        while (red.at(r, c) == 0) ++c;
        pivot_col[static_cast<std::size_t>(r)] = c;
        is_pivot[static_cast<std::size_t>(c)] = true;
    }
    Mat basis(k, m.cols - rank, m.cols);
    int row = 0;
    for (int fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        basis.at(row, fc) = 1;
        for (int r = 0; r < rank; ++r)
            basis.at(row, pivot_col[static_cast<std::size_t>(r)]) = k.neg(red.at(r, fc));
        ++row;
    }
    rref(basis);  // free-variable vectors span the kernel but are not canonical yet
    return basis;
}

Subspace::Subspace(Field field, int ambient, Mat basis)
    : field_(std::move(field)), ambient_(ambient), basis_(std::move(basis)) {}

Subspace Subspace::span_of(Mat rows) {
    Field field = rows.field;
    int ambient = rows.cols;
    int rank = rref(rows);
    Mat basis(field, rank, ambient);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < ambient; ++c) basis.at(r, c) = rows.at(r, c);
    return Subspace(std::move(field), ambient, std::move(basis));
}

Subspace Subspace::zero(Field field, int ambient) {
    Mat basis(field, 0, ambient);
    return Subspace(std::move(field), ambient, std::move(basis));
}

Subspace Subspace::full(Field field, int ambient) {
    Mat basis(field, ambient, ambient);
    for (int i = 0; i < ambient; ++i) basis.at(i, i) = 1;
    return Subspace(std::move(field), ambient, std::move(basis));
}

std::vector<Elem> Subspace::basis_row(int r) const {
    std::vector<Elem> out(static_cast<std::size_t>(ambient_));
    for (int c = 0; c < ambient_; ++c) out[static_cast<std::size_t>(c)] = basis_.at(r, c);
    return out;
}

Subspace Subspace::perp() const {
    if (basis_.rows == 0) return full(field_, ambient_);
    Mat ns = nullspace(basis_);
    return Subspace(field_, ambient_, std::move(ns));
}

bool Subspace::contains(const std::vector<Elem>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("vector has wrong length");
    std::vector<Elem> w = v;
    // reduce by the RREF basis; membership iff the residue vanishes
    for (int r = 0, c = 0; r < basis_.rows; ++r) {
        while (c < ambient_ && basis_.at(r, c) == 0) ++c;
        if (c >= ambient_) break;
        Elem f = w[static_cast<std::size_t>(c)];
        if (f != 0)
            for (int j = c; j < ambient_; ++j)
                w[static_cast<std::size_t>(j)] = field_.sub(w[static_cast<std::size_t>(j)], field_.mul(f, basis_.at(r, j)));
    }
    for (Elem x : w)
        if (x != 0) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_row(r))) return false;
    return true;
}

std::vector<Elem> Subspace::key() const {
    std::vector<Elem> k;
    k.reserve(basis_.a.size() + 2);
    k.push_back(static_cast<Elem>(ambient_));
    k.push_back(static_cast<Elem>(basis_.rows));
    k.insert(k.end(), basis_.a.begin(), basis_.a.end());
    return k;
}

int intersection_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspaces of different ambient spaces");
    Subspace pa = a.perp(), pb = b.perp();
    Mat stacked(a.field(), pa.dim() + pb.dim(), a.ambient());
    for (int r = 0; r < pa.dim(); ++r)
        for (int c = 0; c < a.ambient(); ++c) stacked.at(r, c) = pa.basis().at(r, c);
    for (int r = 0; r < pb.dim(); ++r)
        for (int c = 0; c < a.ambient(); ++c) stacked.at(pa.dim() + r, c) = pb.basis().at(r, c);
    return a.ambient() - rref(stacked);
}

}  // namespace ffr
