#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "sumrange/bitvec.hpp"
#include "sumrange/core.hpp"

namespace sumrange {

GroupSpec::GroupSpec(std::vector<Int> torsion_moduli, Int free_rank)
    : moduli_(std::move(torsion_moduli)), free_rank_(free_rank) {
    for (Int m : moduli_)
        if (m < 2) throw std::invalid_argument("GroupSpec: torsion moduli must be >= 2");
    if (free_rank_ < 0) throw std::invalid_argument("GroupSpec: free rank must be >= 0");
}

Int GroupSpec::torsion_size() const {
    Int n = 1;
    for (Int m : moduli_) n = checked_mul(n, m);
    return n;
}

GroupElem g_zero(const GroupSpec& spec) {
    return GroupElem{std::vector<Int>(static_cast<std::size_t>(spec.coord_count()), 0)};
}

GroupElem g_reduce(const GroupSpec& spec, std::vector<Int> coords) {
    if (static_cast<Int>(coords.size()) != spec.coord_count())
        throw std::invalid_argument("group element has wrong number of coordinates");
    const auto& mod = spec.torsion_moduli();
    for (std::size_t i = 0; i < mod.size(); ++i) {
        coords[i] %= mod[i];
        if (coords[i] < 0) coords[i] += mod[i];
    }
    return GroupElem{std::move(coords)};
}

GroupElem g_add(const GroupSpec& spec, const GroupElem& a, const GroupElem& b) {
    const auto& mod = spec.torsion_moduli();
    std::vector<Int> out(a.coords.size());
    for (std::size_t i = 0; i < mod.size(); ++i) {
        const Int x = a.coords[i], y = b.coords[i], m = mod[i];
        out[i] = (x >= m - y) ? x - (m - y) : x + y;  // overflow-free mod-m add
    }
    for (std::size_t i = mod.size(); i < out.size(); ++i)
        out[i] = checked_add(a.coords[i], b.coords[i]);
    return GroupElem{std::move(out)};
}

GroupElem g_negate(const GroupSpec& spec, const GroupElem& a) {
    const auto& mod = spec.torsion_moduli();
    std::vector<Int> out(a.coords.size());
    for (std::size_t i = 0; i < mod.size(); ++i)
        out[i] = a.coords[i] == 0 ? 0 : mod[i] - a.coords[i];
    for (std::size_t i = mod.size(); i < out.size(); ++i) out[i] = checked_sub(0, a.coords[i]);
    return GroupElem{std::move(out)};
}

GroupElem g_scale(const GroupSpec& spec, Int n, const GroupElem& a) {
    const auto& mod = spec.torsion_moduli();
    std::vector<Int> out(a.coords.size());
    for (std::size_t i = 0; i < mod.size(); ++i) {
        const Int m = mod[i];
        Int nm = n % m;
        if (nm < 0) nm += m;
        out[i] = static_cast<Int>((static_cast<__int128>(a.coords[i]) * nm) % m);
    }
    for (std::size_t i = mod.size(); i < out.size(); ++i) out[i] = checked_mul(n, a.coords[i]);
    return GroupElem{std::move(out)};
}

Int g_order(const GroupSpec& spec, const GroupElem& a) {
    const auto& mod = spec.torsion_moduli();
    for (std::size_t i = mod.size(); i < a.coords.size(); ++i)
        if (a.coords[i] != 0) return 0;  // infinite order
    Int order = 1;
    for (std::size_t i = 0; i < mod.size(); ++i) {
        const Int o = mod[i] / std::gcd(mod[i], a.coords[i]);
        try {
            order = checked_mul(order / std::gcd(order, o), o);
        } catch (const std::overflow_error&) {
            return std::numeric_limits<Int>::max();  // saturate; only compared against
        }
    }
    return order;
}

GroupSet::GroupSet(GroupSpec spec, std::vector<GroupElem> elems) : spec_(std::move(spec)) {
    elems_.reserve(elems.size());
    for (auto& e : elems) elems_.push_back(g_reduce(spec_, std::move(e.coords)));
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool GroupSet::contains(const GroupElem& e) const {
    return std::binary_search(elems_.begin(), elems_.end(), e);
}

// --- group sumset kernels -------------------------------------------------
//
// For free rank <= 1 the accumulating sumset is kept as a map from torsion
// coordinates to a bit vector over the free coordinate (reduced eagerly in
// the torsion part, integer shift-or per fiber).  Higher free ranks fall
// back to plain ordered-set accumulation.

namespace {

void require_valid(const GroupSet& a, Int h, const char* op) {
    if (a.empty()) throw std::domain_error(std::string(op) + ": set must be nonempty");
    if (h < 1) throw std::domain_error(std::string(op) + ": fold count must be >= 1");
}

// Index of the element minimizing (free part, torsion part); translating by
// it keeps translated free coordinates nonnegative.
std::size_t base_element_index(const GroupSet& a) {
    const Int r = a.spec().torsion_rank();
    std::size_t best = 0;
    for (std::size_t i = 1; i < a.elements().size(); ++i) {
        const auto& e = a.elements()[i].coords;
        const auto& b = a.elements()[best].coords;
        auto key = [&](const std::vector<Int>& c) {
            return std::pair(std::vector<Int>(c.begin() + r, c.end()),
                             std::vector<Int>(c.begin(), c.begin() + r));
        };
        if (key(e) < key(b)) best = i;
    }
    return best;
}

struct FiberedElem {
    std::vector<Int> torsion;
    Int free_off;  // >= 0, relative to the base element
};

using Fibers = std::map<std::vector<Int>, BitVec>;

std::vector<Int> torsion_add(const GroupSpec& spec, const std::vector<Int>& a,
                             const std::vector<Int>& b) {
    const auto& mod = spec.torsion_moduli();
    std::vector<Int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = (a[i] >= mod[i] - b[i]) ? a[i] - (mod[i] - b[i]) : a[i] + b[i];
    return out;
}

Int fibers_count(const Fibers& f) {
    Int n = 0;
    for (const auto& [_, bits] : f) n = checked_add(n, static_cast<Int>(bits.count()));
    return n;
}

GroupSet fibers_to_set(const GroupSpec& spec, const Fibers& f, const GroupElem& shift) {
    std::vector<GroupElem> out;
    for (const auto& [tc, bits] : f) {
        bits.for_each([&](std::size_t fr) {
            std::vector<Int> coords = tc;
            if (spec.free_rank() == 1) coords.push_back(static_cast<Int>(fr));
            out.push_back(g_add(spec, GroupElem{std::move(coords)}, shift));
        });
    }
    return GroupSet(spec, std::move(out));
}

GroupSet sumset_fibered(const GroupSet& a, Int h) {
    const auto& spec = a.spec();
    const std::size_t base_i = base_element_index(a);
    const GroupElem base = a.elements()[base_i];
    const GroupElem neg = g_negate(spec, base);
    const Int r = spec.torsion_rank();

    std::vector<FiberedElem> elems;
    Int fmax = 0;
    for (const auto& e : a.elements()) {
        auto t = g_add(spec, e, neg);
        FiberedElem fe;
        fe.torsion.assign(t.coords.begin(), t.coords.begin() + r);
        fe.free_off = spec.free_rank() == 1 ? t.coords.back() : 0;
        fmax = std::max(fmax, fe.free_off);
        elems.push_back(std::move(fe));
    }

    Fibers cur;
    for (const auto& e : elems) {
        auto [it, _] = cur.try_emplace(e.torsion, static_cast<std::size_t>(fmax) + 1);
        it->second.set(static_cast<std::size_t>(e.free_off));
    }
    Int count = fibers_count(cur);
    for (Int step = 2; step <= h; ++step) {
        Fibers next;
        const std::size_t bits = static_cast<std::size_t>(checked_add(checked_mul(step, fmax), 1));
        for (const auto& [tc, bv] : cur) {
            for (const auto& e : elems) {
                auto [it, _] = next.try_emplace(torsion_add(spec, tc, e.torsion), bits);
                it->second.or_shifted(bv, static_cast<std::size_t>(e.free_off));
            }
        }
        cur = std::move(next);
        const Int c = fibers_count(cur);
        if (c == count) break;  // 0 is in the translate, so growth has stopped for good
        count = c;
    }
    return fibers_to_set(spec, cur, g_scale(spec, h, base));
}

GroupSet restricted_fibered(const GroupSet& a, Int h) {
    const auto& spec = a.spec();
    const std::size_t base_i = base_element_index(a);
    const GroupElem base = a.elements()[base_i];
    const GroupElem neg = g_negate(spec, base);
    const Int r = spec.torsion_rank();

    std::vector<FiberedElem> elems;
    Int fmax = 0;
    for (const auto& e : a.elements()) {
        auto t = g_add(spec, e, neg);
        FiberedElem fe;
        fe.torsion.assign(t.coords.begin(), t.coords.begin() + r);
        fe.free_off = spec.free_rank() == 1 ? t.coords.back() : 0;
        fmax = std::max(fmax, fe.free_off);
        elems.push_back(std::move(fe));
    }

    std::vector<Fibers> layer(static_cast<std::size_t>(h) + 1);
    layer[0].try_emplace(std::vector<Int>(static_cast<std::size_t>(r), 0), 1).first->second.set(0);
    Int processed = 0;
    for (const auto& e : elems) {
        ++processed;
        for (Int j = std::min(h, processed); j >= 1; --j) {
            const std::size_t bits = static_cast<std::size_t>(checked_add(checked_mul(j, fmax), 1));
            auto& dst = layer[static_cast<std::size_t>(j)];
            for (const auto& [tc, bv] : layer[static_cast<std::size_t>(j - 1)]) {
                auto [it, _] = dst.try_emplace(torsion_add(spec, tc, e.torsion), bits);
                it->second.or_shifted(bv, static_cast<std::size_t>(e.free_off));
            }
        }
    }
    return fibers_to_set(spec, layer[static_cast<std::size_t>(h)], g_scale(spec, h, base));
}

GroupSet sumset_generic(const GroupSet& a, Int h) {
    const auto& spec = a.spec();
    const GroupElem base = a.elements().front();
    const GroupElem neg = g_negate(spec, base);
    std::vector<GroupElem> shifted;
    for (const auto& e : a.elements()) shifted.push_back(g_add(spec, e, neg));

    std::set<GroupElem> cur(shifted.begin(), shifted.end());
    std::size_t count = cur.size();
    for (Int step = 2; step <= h; ++step) {
        std::set<GroupElem> next;
        for (const auto& x : cur)
            for (const auto& e : shifted) next.insert(g_add(spec, x, e));
        cur = std::move(next);
        if (cur.size() == count) break;
        count = cur.size();
    }
    const GroupElem shift = g_scale(spec, h, base);
    std::vector<GroupElem> out;
    out.reserve(cur.size());
    for (const auto& x : cur) out.push_back(g_add(spec, x, shift));
    return GroupSet(spec, std::move(out));
}

GroupSet restricted_generic(const GroupSet& a, Int h) {
    const auto& spec = a.spec();
    std::vector<std::set<GroupElem>> layer(static_cast<std::size_t>(h) + 1);
    layer[0].insert(g_zero(spec));
    Int processed = 0;
    for (const auto& e : a.elements()) {
        ++processed;
        for (Int j = std::min(h, processed); j >= 1; --j)
            for (const auto& s : layer[static_cast<std::size_t>(j - 1)])
                layer[static_cast<std::size_t>(j)].insert(g_add(spec, s, e));
    }
    auto& top = layer[static_cast<std::size_t>(h)];
    return GroupSet(spec, std::vector<GroupElem>(top.begin(), top.end()));
}

}  // namespace

GroupSet sumset(const GroupSet& a, Int h) {
    require_valid(a, h, "sumset");
    if (h == 1) return a;
    if (a.spec().free_rank() <= 1) return sumset_fibered(a, h);
    return sumset_generic(a, h);
}

GroupSet restricted_sumset(const GroupSet& a, Int h) {
    require_valid(a, h, "restricted_sumset");
    if (h > a.size()) return GroupSet(a.spec());
    if (a.spec().free_rank() <= 1) return restricted_fibered(a, h);
    return restricted_generic(a, h);
}

bool is_subgroup_coset(const GroupSet& a) {
    if (a.empty()) throw std::domain_error("is_subgroup_coset: set must be nonempty");
    if (a.size() == 1) return true;
    const auto& spec = a.spec();
    for (const auto& e : a.elements())
        for (Int i = spec.torsion_rank(); i < spec.coord_count(); ++i)
            if (e.coords[static_cast<std::size_t>(i)] != 0)
                throw std::domain_error(
                    "is_subgroup_coset: every element must have finite order "
                    "(nonzero free coordinate found)");
    const GroupElem neg = g_negate(spec, a.elements().front());
    std::vector<GroupElem> h;
    h.reserve(a.elements().size());
    for (const auto& e : a.elements()) h.push_back(g_add(spec, e, neg));
    GroupSet translate(spec, std::move(h));
    for (const auto& x : translate.elements())
        for (const auto& y : translate.elements())
            if (!translate.contains(g_add(spec, x, y))) return false;
    return true;
}

GroupSet embed_integers(const IntSet& a, const GroupSpec& spec, const GroupElem& generator,
                        Int h) {
    if (a.empty()) throw std::domain_error("embed_integers: set must be nonempty");
    if (h < 1) throw std::domain_error("embed_integers: fold count must be >= 1");
    const GroupElem gen = g_reduce(spec, std::vector<Int>(generator.coords));
    const Int order = g_order(spec, gen);
    if (order != 0) {
        const Int bound = checked_mul(h, a.max());
        if (order <= bound)
            throw std::domain_error("embed_integers: generator order " + std::to_string(order) +
                                    " must exceed h*max(A) = " + std::to_string(bound));
    }
    std::vector<GroupElem> elems;
    elems.reserve(static_cast<std::size_t>(a.size()));
    for (Int v : a) elems.push_back(g_scale(spec, v, gen));
    GroupSet out(spec, std::move(elems));
    if (out.size() != a.size())
        throw std::domain_error("embed_integers: embedded set collapsed; generator order " +
                                std::to_string(order) + " is too small for this set");
    return out;
}

}  // namespace sumrange
