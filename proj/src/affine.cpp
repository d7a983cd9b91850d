#include "relcirc/affine.hpp"

#include <algorithm>
#include <sstream>

namespace relcirc {

namespace linalg {

namespace {

// pivot preference: low-degree entries keep elimination cheap
long entry_weight(const RatFunc& f) {
    return f.num().degree() + f.den().degree();
}

} // namespace

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        long best_weight = 0;
        for (int i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            long w = entry_weight(m[i][c]);
            if (best < 0 || w < best_weight) {
                best = i;
                best_weight = w;
            }
        }
        if (best < 0) continue;
        std::swap(m[r], m[best]);
        if (!(m[r][c] == RatFunc::one())) {
            RatFunc inv = m[r][c].inverse();
            for (int j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[r][j] *= inv;
        }
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            RatFunc f = m[i][c];
            for (int j = c; j < cols; ++j)
                if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    return pivots;
}

std::optional<LinearSolution> solve(const Mat& A, const Vec& b, int num_cols) {
    const int rows = static_cast<int>(A.size());
    const int cols = num_cols;
    Mat aug(rows, Vec(cols + 1));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = A[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

    std::vector<int> pivot_of_col(cols, -1);
    for (size_t k = 0; k < pivots.size(); ++k) pivot_of_col[pivots[k]] = static_cast<int>(k);

    LinearSolution sol;
    sol.particular.assign(cols, RatFunc::zero());
    for (size_t k = 0; k < pivots.size(); ++k)
        sol.particular[pivots[k]] = aug[k][cols];

    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols, RatFunc::zero());
        v[c] = RatFunc::one();
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -aug[k][c];
        sol.null_basis.push_back(std::move(v));
    }
    return sol;
}

} // namespace linalg

AffineRelation AffineRelation::empty(int dom_width, int cod_width) {
    AffineRelation r(dom_width, cod_width);
    r.empty_ = true;
    return r;
}

AffineRelation AffineRelation::span(Vec offset, Mat basis, int dom_width, int cod_width) {
    const size_t d = static_cast<size_t>(dom_width) + static_cast<size_t>(cod_width);
    if (offset.size() != d)
        throw Error(Errc::DimensionMismatch, "offset length does not match ambient dimension");
    for (const Vec& row : basis)
        if (row.size() != d)
            throw Error(Errc::DimensionMismatch, "basis row length does not match ambient dimension");

    AffineRelation r(dom_width, cod_width);
    std::vector<int> pivots = linalg::rref(basis);
    for (size_t k = 0; k < basis.size(); ++k) {
        const int c = pivots[k];
        if (offset[c].is_zero()) continue;
        RatFunc f = offset[c];
        for (size_t j = c; j < d; ++j)
            if (!basis[k][j].is_zero()) offset[j] -= f * basis[k][j];
    }
    r.offset_ = std::move(offset);
    r.basis_ = std::move(basis);
    return r;
}

AffineRelation AffineRelation::from_constraints(const Mat& E, const Vec& f, int dom_width,
                                                int cod_width) {
    const size_t d = static_cast<size_t>(dom_width) + static_cast<size_t>(cod_width);
    if (E.size() != f.size())
        throw Error(Errc::DimensionMismatch, "constraint rows and rhs length differ");
    for (const Vec& row : E)
        if (row.size() != d)
            throw Error(Errc::DimensionMismatch, "constraint row length does not match ambient");
    if (E.empty()) {
        Mat id(d, Vec(d, RatFunc::zero()));
        for (size_t i = 0; i < d; ++i) id[i][i] = RatFunc::one();
        return span(Vec(d, RatFunc::zero()), std::move(id), dom_width, cod_width);
    }
    auto sol = linalg::solve(E, f, static_cast<int>(d));
    if (!sol) return empty(dom_width, cod_width);
    return span(std::move(sol->particular), std::move(sol->null_basis), dom_width, cod_width);
}

AffineRelation AffineRelation::identity(int width) {
    // already canonical, no reduction needed
    AffineRelation r(width, width);
    r.offset_.assign(2 * width, RatFunc::zero());
    r.basis_.assign(width, Vec(2 * width, RatFunc::zero()));
    for (int i = 0; i < width; ++i) {
        r.basis_[i][i] = RatFunc::one();
        r.basis_[i][width + i] = RatFunc::one();
    }
    return r;
}

AffineRelation AffineRelation::singleton(Vec point, int dom_width, int cod_width) {
    return span(std::move(point), Mat{}, dom_width, cod_width);
}

AffineRelation AffineRelation::compose(const AffineRelation& other) const {
    if (cod_ != other.dom_)
        throw Error(Errc::WidthMismatch, "compose: cod width " + std::to_string(cod_) +
                                             " vs dom width " + std::to_string(other.dom_));
    const int m = dom_, n = cod_, p = other.cod_;
    if (empty_ || other.empty_) return empty(m, p);

    const int kr = static_cast<int>(basis_.size());
    const int ks = static_cast<int>(other.basis_.size());

    // match middle coordinates of the two parametrizations
    Mat A(n, Vec(kr + ks, RatFunc::zero()));
    Vec b(n, RatFunc::zero());
    for (int j = 0; j < n; ++j) {
        for (int a = 0; a < kr; ++a) A[j][a] = basis_[a][m + j];
        for (int s = 0; s < ks; ++s) A[j][kr + s] = -other.basis_[s][j];
        b[j] = other.offset_[j] - offset_[m + j];
    }
    auto sol = linalg::solve(A, b, kr + ks);
    if (!sol) return empty(m, p);

    auto outer = [&](const Vec& params, bool with_offset) {
        Vec out(m + p, RatFunc::zero());
        for (int i = 0; i < m; ++i) {
            RatFunc v = with_offset ? offset_[i] : RatFunc::zero();
            for (int a = 0; a < kr; ++a)
                if (!params[a].is_zero() && !basis_[a][i].is_zero()) v += params[a] * basis_[a][i];
            out[i] = std::move(v);
        }
        for (int i = 0; i < p; ++i) {
            RatFunc v = with_offset ? other.offset_[n + i] : RatFunc::zero();
            for (int s = 0; s < ks; ++s)
                if (!params[kr + s].is_zero() && !other.basis_[s][n + i].is_zero())
                    v += params[kr + s] * other.basis_[s][n + i];
            out[m + i] = std::move(v);
        }
        return out;
    };

    Vec offset = outer(sol->particular, true);
    Mat basis;
    basis.reserve(sol->null_basis.size());
    for (const Vec& nv : sol->null_basis) basis.push_back(outer(nv, false));
    return span(std::move(offset), std::move(basis), m, p);
}

AffineRelation AffineRelation::tensor(const AffineRelation& other) const {
    const int m = dom_ + other.dom_;
    const int n = cod_ + other.cod_;
    if (empty_ || other.empty_) return empty(m, n);

    const int d = m + n;
    auto embed_left = [&](const Vec& v) {
        Vec out(d, RatFunc::zero());
        for (int i = 0; i < dom_; ++i) out[i] = v[i];
        for (int i = 0; i < cod_; ++i) out[m + i] = v[dom_ + i];
        return out;
    };
    auto embed_right = [&](const Vec& v) {
        Vec out(d, RatFunc::zero());
        for (int i = 0; i < other.dom_; ++i) out[dom_ + i] = v[i];
        for (int i = 0; i < other.cod_; ++i) out[m + cod_ + i] = v[other.dom_ + i];
        return out;
    };

    // both embeddings are order-preserving on columns, so merging rows by
    // pivot column preserves RREF and the reduced offsets stay reduced
    Vec offset = embed_left(offset_);
    {
        Vec rhs = embed_right(other.offset_);
        for (int i = 0; i < d; ++i)
            if (!rhs[i].is_zero()) offset[i] = std::move(rhs[i]);
    }
    auto pivot_col = [](const Vec& row) {
        for (size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero()) return static_cast<int>(j);
        return -1;
    };
    Mat basis;
    basis.reserve(basis_.size() + other.basis_.size());
    size_t a = 0, s = 0;
    Mat left, right;
    left.reserve(basis_.size());
    right.reserve(other.basis_.size());
    for (const Vec& row : basis_) left.push_back(embed_left(row));
    for (const Vec& row : other.basis_) right.push_back(embed_right(row));
    while (a < left.size() || s < right.size()) {
        if (s >= right.size() || (a < left.size() && pivot_col(left[a]) < pivot_col(right[s])))
            basis.push_back(std::move(left[a++]));
        else
            basis.push_back(std::move(right[s++]));
    }

    AffineRelation r(m, n);
    r.offset_ = std::move(offset);
    r.basis_ = std::move(basis);
    return r;
}

AffineRelation AffineRelation::converse() const {
    if (empty_) return empty(cod_, dom_);
    auto swap_blocks = [&](const Vec& v) {
        Vec out(v.size());
        for (int i = 0; i < cod_; ++i) out[i] = v[dom_ + i];
        for (int i = 0; i < dom_; ++i) out[cod_ + i] = v[i];
        return out;
    };
    Vec offset = swap_blocks(offset_);
    Mat basis;
    basis.reserve(basis_.size());
    for (const Vec& row : basis_) basis.push_back(swap_blocks(row));
    return span(std::move(offset), std::move(basis), cod_, dom_);
}

bool AffineRelation::direction_contains(const Vec& v) const {
    if (empty_) return false;
    Vec w = v;
    for (size_t k = 0; k < basis_.size(); ++k) {
        int c = -1;
        for (size_t j = 0; j < basis_[k].size(); ++j)
            if (!basis_[k][j].is_zero()) {
                c = static_cast<int>(j);
                break;
            }
        if (c < 0 || w[c].is_zero()) continue;
        RatFunc f = w[c];
        for (size_t j = c; j < w.size(); ++j)
            if (!basis_[k][j].is_zero()) w[j] -= f * basis_[k][j];
    }
    for (const RatFunc& entry : w)
        if (!entry.is_zero()) return false;
    return true;
}

bool AffineRelation::member(const Vec& point) const {
    if (empty_) return false;
    if (point.size() != offset_.size())
        throw Error(Errc::DimensionMismatch, "membership point has wrong dimension");
    Vec diff(point.size());
    for (size_t i = 0; i < point.size(); ++i) diff[i] = point[i] - offset_[i];
    return direction_contains(diff);
}

bool AffineRelation::contains(const AffineRelation& other) const {
    if (dom_ != other.dom_ || cod_ != other.cod_)
        throw Error(Errc::WidthMismatch, "containment between different widths");
    if (other.empty_) return true;
    if (empty_) return false;
    Vec diff(offset_.size());
    for (size_t i = 0; i < offset_.size(); ++i) diff[i] = other.offset_[i] - offset_[i];
    if (!direction_contains(diff)) return false;
    for (const Vec& row : other.basis_)
        if (!direction_contains(row)) return false;
    return true;
}

AffineRelation::Functionality AffineRelation::functionality() const {
    if (empty_) return {false, true};
    Mat dom_proj;
    dom_proj.reserve(basis_.size());
    for (const Vec& row : basis_)
        dom_proj.emplace_back(row.begin(), row.begin() + dom_);
    linalg::rref(dom_proj);
    const int rank_dom = static_cast<int>(dom_proj.size());
    return {rank_dom == dom_, rank_dom == static_cast<int>(basis_.size())};
}

void AffineRelation::to_constraints(Mat& E, Vec& f) const {
    if (empty_)
        throw Error(Errc::InvariantViolation, "constraint form of the empty relation");
    const size_t d = offset_.size();
    std::vector<int> pivot_of_col(d, -1);
    for (size_t k = 0; k < basis_.size(); ++k) {
        for (size_t j = 0; j < d; ++j)
            if (!basis_[k][j].is_zero()) {
                pivot_of_col[j] = static_cast<int>(k);
                break;
            }
    }
    E.clear();
    f.clear();
    for (size_t c = 0; c < d; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec row(d, RatFunc::zero());
        row[c] = RatFunc::one();
        for (size_t k = 0; k < basis_.size(); ++k) {
            // pivot column of row k
            size_t pc = 0;
            while (basis_[k][pc].is_zero()) ++pc;
            if (pc < c) row[pc] = -basis_[k][c];
        }
        RatFunc rhs = RatFunc::zero();
        for (size_t j = 0; j < d; ++j)
            if (!row[j].is_zero()) rhs += row[j] * offset_[j];
        E.push_back(std::move(row));
        f.push_back(std::move(rhs));
    }
}

AffineRelation AffineRelation::project_prefix(int new_dom, int new_cod) const {
    const int d0 = new_dom + new_cod;
    if (d0 > ambient())
        throw Error(Errc::DimensionMismatch, "projection wider than ambient");
    if (empty_) return empty(new_dom, new_cod);
    Vec offset(offset_.begin(), offset_.begin() + d0);
    Mat basis;
    basis.reserve(basis_.size());
    for (const Vec& row : basis_) basis.emplace_back(row.begin(), row.begin() + d0);
    return span(std::move(offset), std::move(basis), new_dom, new_cod);
}

bool operator==(const AffineRelation& a, const AffineRelation& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.empty_ != b.empty_) return false;
    if (a.empty_) return true;
    return a.offset_ == b.offset_ && a.basis_ == b.basis_;
}

std::string AffineRelation::json() const {
    std::ostringstream os;
    auto emit_vec = [&os](const Vec& v) {
        os << '[';
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << '"' << v[i].str() << '"';
        }
        os << ']';
    };
    os << "{\"dom_width\":" << dom_ << ",\"cod_width\":" << cod_
       << ",\"empty\":" << (empty_ ? "true" : "false") << ",\"offset\":";
    emit_vec(offset_);
    os << ",\"basis\":[";
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i) os << ',';
        emit_vec(basis_[i]);
    }
    os << "]}";
    return os.str();
}

} // namespace relcirc
