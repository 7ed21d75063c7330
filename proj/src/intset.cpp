#include "sumrange/core.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "sumrange/bitvec.hpp"

namespace sumrange {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

IntSet::IntSet(std::vector<Int> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

IntSet IntSet::from_sorted(std::vector<Int> elems) {
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i - 1] >= elems[i])
            throw std::invalid_argument("IntSet::from_sorted: sequence not strictly increasing");
    IntSet s;
    s.elems_ = std::move(elems);
    return s;
}

IntSet IntSet::interval(Int lo, Int hi) {
    IntSet s;
    if (lo > hi) return s;
    s.elems_.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Int v = lo; v <= hi; ++v) s.elems_.push_back(v);
    return s;
}

Int IntSet::min() const {
    if (empty()) throw std::domain_error("min of empty set");
    return elems_.front();
}

Int IntSet::max() const {
    if (empty()) throw std::domain_error("max of empty set");
    return elems_.back();
}

Int IntSet::diameter() const { return checked_sub(max(), min()); }

Int IntSet::element_sum() const {
    Int s = 0;
    for (Int v : elems_) s = checked_add(s, v);
    return s;
}

bool IntSet::contains(Int x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
}

// --- integer kernels ----------------------------------------------------

namespace {

std::atomic<Int> g_dense_limit{Int{1} << 26};

void require_valid(const IntSet& a, Int h, const char* op) {
    if (a.empty()) throw std::domain_error(std::string(op) + ": set must be nonempty");
    if (h < 1) throw std::domain_error(std::string(op) + ": fold count must be >= 1");
}

std::vector<Int> offsets_of(const IntSet& a) {
    std::vector<Int> off;
    off.reserve(static_cast<std::size_t>(a.size()));
    const Int lo = a.min();
    for (Int v : a) off.push_back(checked_sub(v, lo));
    return off;
}

// h-fold sumset over nonnegative offsets, dense bits indexed by sum value.
BitVec dense_sumset(const std::vector<Int>& off, Int h) {
    const Int dia = off.back();
    BitVec cur(static_cast<std::size_t>(dia) + 1);
    for (Int b : off) cur.set(static_cast<std::size_t>(b));
    for (Int step = 2; step <= h; ++step) {
        BitVec next(static_cast<std::size_t>(checked_add(checked_mul(step, dia), 1)));
        for (Int b : off) next.or_shifted(cur, static_cast<std::size_t>(b));
        cur = std::move(next);
    }
    return cur;
}

// Layered subset-sum DP over offsets: layer j holds all sums of j distinct
// elements of the processed prefix.  Assumes 1 <= h <= |off|.
BitVec dense_restricted(const std::vector<Int>& off, Int h) {
    const Int dia = off.back();
    std::vector<BitVec> layer(static_cast<std::size_t>(h) + 1);
    for (Int j = 0; j <= h; ++j)
        layer[static_cast<std::size_t>(j)] =
            BitVec(static_cast<std::size_t>(checked_add(checked_mul(j, dia), 1)));
    layer[0].set(0);
    Int processed = 0;
    for (Int b : off) {
        ++processed;
        for (Int j = std::min(h, processed); j >= 1; --j)
            layer[static_cast<std::size_t>(j)].or_shifted(layer[static_cast<std::size_t>(j - 1)],
                                                          static_cast<std::size_t>(b));
    }
    return layer[static_cast<std::size_t>(h)];
}

std::vector<Int> sorted_union_sums(const std::vector<Int>& cur, const std::vector<Int>& add) {
    std::vector<Int> out;
    out.reserve(cur.size() * add.size());
    for (Int a : add)
        for (Int c : cur) out.push_back(checked_add(c, a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> merge_sumset(const std::vector<Int>& values, Int h) {
    std::vector<Int> cur = values;
    for (Int step = 2; step <= h; ++step) cur = sorted_union_sums(cur, values);
    return cur;
}

std::vector<Int> merge_restricted(const std::vector<Int>& values, Int h) {
    std::vector<std::vector<Int>> layer(static_cast<std::size_t>(h) + 1);
    layer[0] = {0};
    Int processed = 0;
    for (Int v : values) {
        ++processed;
        for (Int j = std::min(h, processed); j >= 1; --j) {
            std::vector<Int> shifted;
            const auto& prev = layer[static_cast<std::size_t>(j - 1)];
            shifted.reserve(prev.size());
            for (Int s : prev) shifted.push_back(checked_add(s, v));
            auto& dst = layer[static_cast<std::size_t>(j)];
            std::vector<Int> merged;
            merged.reserve(dst.size() + shifted.size());
            std::set_union(dst.begin(), dst.end(), shifted.begin(), shifted.end(),
                           std::back_inserter(merged));
            dst = std::move(merged);
        }
    }
    return layer[static_cast<std::size_t>(h)];
}

IntSet from_bits(const BitVec& bits, Int base) {
    std::vector<Int> out;
    out.reserve(bits.count());
    bits.for_each([&](std::size_t i) { out.push_back(checked_add(base, static_cast<Int>(i))); });
    return IntSet::from_sorted(std::move(out));
}

}  // namespace

Int dense_diameter_limit() { return g_dense_limit.load(); }
void set_dense_diameter_limit(Int limit) { g_dense_limit.store(limit); }

IntSet sumset(const IntSet& a, Int h) {
    require_valid(a, h, "sumset");
    if (h == 1) return a;
    if (a.diameter() > dense_diameter_limit())
        return IntSet::from_sorted(merge_sumset(a.elements(), h));
    const auto off = offsets_of(a);
    return from_bits(dense_sumset(off, h), checked_mul(h, a.min()));
}

Int sumset_size(const IntSet& a, Int h) {
    return sumset_size_sorted(a.elements(), h);
}

Int sumset_size_sorted(std::span<const Int> elems, Int h) {
    if (elems.empty()) throw std::domain_error("sumset: set must be nonempty");
    if (h < 1) throw std::domain_error("sumset: fold count must be >= 1");
    if (h == 1) return static_cast<Int>(elems.size());
    const Int dia = checked_sub(elems.back(), elems.front());
    if (dia > dense_diameter_limit()) {
        std::vector<Int> v(elems.begin(), elems.end());
        return static_cast<Int>(merge_sumset(v, h).size());
    }
    std::vector<Int> off;
    off.reserve(elems.size());
    for (Int v : elems) off.push_back(v - elems.front());
    return static_cast<Int>(dense_sumset(off, h).count());
}

IntSet restricted_sumset(const IntSet& a, Int h) {
    require_valid(a, h, "restricted_sumset");
    if (h > a.size()) return IntSet{};
    if (a.diameter() > dense_diameter_limit())
        return IntSet::from_sorted(merge_restricted(a.elements(), h));
    const auto off = offsets_of(a);
    return from_bits(dense_restricted(off, h), checked_mul(h, a.min()));
}

Int restricted_sumset_size(const IntSet& a, Int h) {
    return restricted_sumset_size_sorted(a.elements(), h);
}

Int restricted_sumset_size_sorted(std::span<const Int> elems, Int h) {
    if (elems.empty()) throw std::domain_error("restricted_sumset: set must be nonempty");
    if (h < 1) throw std::domain_error("restricted_sumset: fold count must be >= 1");
    if (h > static_cast<Int>(elems.size())) return 0;
    const Int dia = checked_sub(elems.back(), elems.front());
    if (dia > dense_diameter_limit()) {
        std::vector<Int> v(elems.begin(), elems.end());
        return static_cast<Int>(merge_restricted(v, h).size());
    }
    std::vector<Int> off;
    off.reserve(elems.size());
    for (Int v : elems) off.push_back(v - elems.front());
    return static_cast<Int>(dense_restricted(off, h).count());
}

IntSet normalize(const IntSet& a) {
    if (a.empty()) throw std::domain_error("normalize: set must be nonempty");
    std::vector<Int> v = offsets_of(a);
    if (v.size() >= 2) {
        Int g = 0;
        for (Int x : v) g = std::gcd(g, x);
        for (Int& x : v) x /= g;
    }
    std::vector<Int> refl(v.size());
    const Int top = v.back();
    for (std::size_t i = 0; i < v.size(); ++i) refl[i] = top - v[v.size() - 1 - i];
    return IntSet::from_sorted(refl < v ? std::move(refl) : std::move(v));
}

bool is_arithmetic_progression(const IntSet& a) {
    if (a.empty()) throw std::domain_error("is_arithmetic_progression: set must be nonempty");
    const auto& e = a.elements();
    if (e.size() <= 2) return true;
    const Int d = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i)
        if (e[i] - e[i - 1] != d) return false;
    return true;
}

}  // namespace sumrange
