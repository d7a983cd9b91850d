#include "relcirc/build.hpp"

#include <numeric>

namespace relcirc {

TermPtr cup_e() { return seq(open_left(), junction()); }
TermPtr cap_e() { return seq(cojunction(), open_right()); }
TermPtr cup_n() { return seq(codiscard_gen(), copy_gen()); }
TermPtr cap_n() { return seq(cocopy_gen(), discard_gen()); }
TermPtr cup_sort(Sort s) { return s == Sort::Electric ? cup_e() : cup_n(); }
TermPtr cap_sort(Sort s) { return s == Sort::Electric ? cap_e() : cap_n(); }

namespace {

bool identity_perm(const std::vector<int>& perm) {
    for (size_t j = 0; j < perm.size(); ++j)
        if (perm[j] != static_cast<int>(j)) return false;
    return true;
}

} // namespace

TermPtr permutation_term(const SortWord& from, const std::vector<int>& perm) {
    const int n = static_cast<int>(from.size());
    if (static_cast<int>(perm.size()) != n)
        throw Error(Errc::DimensionMismatch, "permutation size mismatch");
    // selection sort with adjacent transpositions
    std::vector<int> cur(n);
    std::iota(cur.begin(), cur.end(), 0);
    SortWord word = from;
    TermPtr t = id(from);
    for (int target = 0; target < n; ++target) {
        int pos = target;
        while (cur[pos] != perm[target]) ++pos;
        for (int q = pos; q > target; --q) {
            SortWord pre(word.begin(), word.begin() + (q - 1));
            SortWord post(word.begin() + (q + 1), word.end());
            TermPtr layer = swap_gen(word[q - 1], word[q]);
            if (!pre.empty()) layer = par(id(pre), layer);
            if (!post.empty()) layer = par(layer, id(post));
            t = seq(t, layer);
            std::swap(word[q - 1], word[q]);
            std::swap(cur[q - 1], cur[q]);
        }
    }
    return t;
}

TermPtr cup_word(const SortWord& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return id(SortWord{});
    std::vector<TermPtr> cups;
    cups.reserve(n);
    SortWord paired;
    for (Sort s : w) {
        cups.push_back(cup_sort(s));
        paired.push_back(s);
        paired.push_back(s);
    }
    TermPtr t = par_all(cups); // 0 -> s0 s0 s1 s1 ...
    std::vector<int> perm(2 * n);
    for (int j = 0; j < n; ++j) {
        perm[j] = 2 * j;
        perm[n + j] = 2 * j + 1;
    }
    if (identity_perm(perm)) return t;
    return seq(t, permutation_term(paired, perm));
}

TermPtr cap_word(const SortWord& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0) return id(SortWord{});
    SortWord doubled;
    for (int r = 0; r < 2; ++r) doubled.insert(doubled.end(), w.begin(), w.end());
    // send (a0..an-1, b0..bn-1) to (a0,b0, a1,b1, ...)
    std::vector<int> perm(2 * n);
    for (int j = 0; j < n; ++j) {
        perm[2 * j] = j;
        perm[2 * j + 1] = n + j;
    }
    std::vector<TermPtr> caps;
    caps.reserve(n);
    for (Sort s : w) caps.push_back(cap_sort(s));
    if (identity_perm(perm)) return par_all(caps);
    return seq(permutation_term(doubled, perm), par_all(caps));
}

TermPtr trace_last(const TermPtr& t) {
    Sorting s = sort_check(t);
    if (s.dom.empty() || s.cod.empty() || s.dom.back() != s.cod.back())
        throw Error(Errc::SortMismatch, "trace_last needs matching trailing sorts");
    Sort tr = s.dom.back();
    SortWord a(s.dom.begin(), s.dom.end() - 1);
    SortWord b(s.cod.begin(), s.cod.end() - 1);
    TermPtr pre = a.empty() ? cup_sort(tr) : par(id(a), cup_sort(tr));
    TermPtr mid = par(t, id(SortWord{tr}));
    TermPtr post = b.empty() ? cap_sort(tr) : par(id(b), cap_sort(tr));
    return seq(seq(pre, mid), post);
}

TermPtr bend_inputs(const TermPtr& e) {
    Sorting s = sort_check(e);
    if (s.dom.empty()) return e;
    return seq(cup_word(s.dom), par(id(s.dom), e));
}

TermPtr reverse_oneport(const TermPtr& c) {
    Sorting s = sort_check(c);
    if (s.dom != word_electric(1) || s.cod != word_electric(1))
        throw Error(Errc::SortMismatch, "reverse_oneport needs an E -> E term");
    TermPtr t = par(cup_e(), id_e());
    t = seq(t, par(id_e(), par(c, id_e())));
    return seq(t, par(id_e(), cap_e()));
}

TermPtr parallel_circuit(const TermPtr& a, const TermPtr& b) {
    return seq(seq(junction(), par(a, b)), cojunction());
}

TermPtr loop_close(const TermPtr& c) { return trace_last(c); }

TermPtr spider(int degree) {
    if (degree < 0) throw Error(Errc::BadValue, "spider degree must be nonnegative");
    if (degree == 0) return seq(open_left(), open_right());
    TermPtr t = open_left();
    for (int d = 2; d <= degree; ++d) {
        TermPtr layer = junction();
        if (d > 2) layer = par(id(word_electric(d - 2)), layer);
        t = seq(t, layer);
    }
    return t;
}

TermPtr const_info(const RatFunc& v) { return seq(one_gen(), scalar(v)); }

TermPtr shift_info(const RatFunc& c) {
    return seq(par(id_n(), const_info(c)), add_gen());
}

TermPtr co_const(const RatFunc& v) { return seq(shift_info(-v), cozero_gen()); }

TermPtr empty_payload() {
    return par(seq(one_gen(), cozero_gen()), seq(discard_gen(), codiscard_gen()));
}

Pipeline::Pipeline(SortWord dom) : term_(id(dom)), frontier_(std::move(dom)) {}

void Pipeline::apply(const TermPtr& stage, int at) {
    Sorting s = sort_check(stage);
    const int k = static_cast<int>(s.dom.size());
    if (at < 0 || at + k > width())
        throw Error(Errc::DimensionMismatch, "pipeline stage out of range");
    for (int i = 0; i < k; ++i)
        if (frontier_[at + i] != s.dom[i])
            throw Error(Errc::SortMismatch, "pipeline stage sort mismatch at position " +
                                                std::to_string(at + i));
    SortWord pre(frontier_.begin(), frontier_.begin() + at);
    SortWord post(frontier_.begin() + at + k, frontier_.end());
    TermPtr layer = stage;
    if (!pre.empty()) layer = par(id(pre), layer);
    if (!post.empty()) layer = par(layer, id(post));
    term_ = seq(term_, layer);
    SortWord next = pre;
    next.insert(next.end(), s.cod.begin(), s.cod.end());
    next.insert(next.end(), post.begin(), post.end());
    frontier_ = std::move(next);
}

void Pipeline::move(int from, int to) {
    if (from < 0 || from >= width() || to < 0 || to >= width())
        throw Error(Errc::DimensionMismatch, "pipeline move out of range");
    while (from > to) {
        apply(swap_gen(frontier_[from - 1], frontier_[from]), from - 1);
        --from;
    }
    while (from < to) {
        apply(swap_gen(frontier_[from], frontier_[from + 1]), from);
        ++from;
    }
}

void Pipeline::permute(const std::vector<int>& perm) {
    if (identity_perm(perm)) return;
    apply(permutation_term(frontier_, perm), 0);
}

} // namespace relcirc
