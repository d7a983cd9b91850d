#ifndef RELCIRC_AFFINE_HPP
#define RELCIRC_AFFINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "relcirc/ratfunc.hpp"

namespace relcirc {

using Vec = std::vector<RatFunc>;
using Mat = std::vector<Vec>;

// Affine subspace of k^(dom+cod) over k = Q(x), in canonical offset+basis
// form, or the empty relation. The basis is kept in reduced row-echelon form
// and the offset has zero entries in every pivot column, so two relations are
// equal as sets iff they are structurally equal.
class AffineRelation {
public:
    static AffineRelation empty(int dom_width, int cod_width);
    // Any generator presentation of a nonempty affine set.
    static AffineRelation span(Vec offset, Mat basis, int dom_width, int cod_width);
    // {z : E z = f}; an inconsistent system yields the empty relation.
    static AffineRelation from_constraints(const Mat& E, const Vec& f, int dom_width,
                                           int cod_width);
    static AffineRelation identity(int width);
    static AffineRelation singleton(Vec point, int dom_width, int cod_width);

    int dom_width() const { return dom_; }
    int cod_width() const { return cod_; }
    int ambient() const { return dom_ + cod_; }
    bool is_empty() const { return empty_; }
    int dim() const { return empty_ ? -1 : static_cast<int>(basis_.size()); }
    const Vec& offset() const { return offset_; }
    const Mat& basis() const { return basis_; }

    AffineRelation compose(const AffineRelation& other) const; // this ; other
    AffineRelation tensor(const AffineRelation& other) const;
    AffineRelation converse() const;

    // set containment: other ⊆ this
    bool contains(const AffineRelation& other) const;

    bool member(const Vec& point) const;
    // direction-space membership (ignores offsets)
    bool direction_contains(const Vec& v) const;

    struct Functionality {
        bool total;
        bool single_valued;
    };
    Functionality functionality() const;

    // Constraint form E z = f of a nonempty relation.
    void to_constraints(Mat& E, Vec& f) const;

    // Existential projection onto the first (new_dom + new_cod) coordinates.
    AffineRelation project_prefix(int new_dom, int new_cod) const;

    friend bool operator==(const AffineRelation& a, const AffineRelation& b);
    friend bool operator!=(const AffineRelation& a, const AffineRelation& b) { return !(a == b); }

    std::string json() const;

private:
    AffineRelation(int dom_width, int cod_width) : dom_(dom_width), cod_(cod_width) {}

    int dom_;
    int cod_;
    bool empty_ = false;
    Vec offset_;
    Mat basis_;
};

namespace linalg {

// In-place reduction to RREF; returns pivot columns and drops zero rows.
std::vector<int> rref(Mat& m);

struct LinearSolution {
    Vec particular;
    Mat null_basis;
};
// Solution set of A z = b over num_cols unknowns, or nullopt when
// inconsistent. num_cols is explicit so zero-equation systems keep their
// full solution space.
std::optional<LinearSolution> solve(const Mat& A, const Vec& b, int num_cols);

} // namespace linalg

} // namespace relcirc

#endif
