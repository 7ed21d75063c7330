#include <fstream>

#include "json.hpp"
#include "sumrange/explorer.hpp"
#include "sumrange/textio.hpp"

namespace sumrange {

namespace {

using nlohmann::json;

std::optional<GroupSpec> normalized(const std::optional<GroupSpec>& group) {
    if (group && group->torsion_rank() == 0 && group->free_rank() == 1) return std::nullopt;
    return group;
}

std::string group_tag(const std::optional<GroupSpec>& group) {
    return group ? to_string(*group) : "z";
}

Int witness_size(const SetValue& wit, Int h, bool restricted) {
    if (std::holds_alternative<IntSet>(wit)) {
        const IntSet& s = std::get<IntSet>(wit);
        return restricted ? restricted_sumset_size(s, h) : sumset_size(s, h);
    }
    const GroupSet& s = std::get<GroupSet>(wit);
    return (restricted ? restricted_sumset(s, h) : sumset(s, h)).size();
}

}  // namespace

std::string cache_cell_name(Int h, Int k, bool restricted, const std::optional<GroupSpec>& group,
                            Int n) {
    std::string g = group_tag(normalized(group));
    std::string safe;
    for (char c : g) {
        if (c == ' ') continue;
        safe += (c == '/') ? 'm' : c;
    }
    return safe + "__" + (restricted ? "restricted" : "plain") + "_h" + std::to_string(h) + "_k" +
           std::to_string(k) + "_N" + std::to_string(n) + ".json";
}

void cache_store(const std::filesystem::path& dir, const SizeRange& range) {
    json j;
    j["format"] = "sumrange.size_range";
    j["format_version"] = 1;
    j["tool_version"] = std::string(kVersion);
    j["h"] = range.h;
    j["k"] = range.k;
    j["restricted"] = range.restricted;
    j["group"] = group_tag(range.group);
    j["search_bound"] = range.search_bound;
    j["complete"] = range.complete;
    j["sizes"] = range.sizes;
    json w = json::object();
    for (const auto& [size, wit] : range.witnesses)
        w[std::to_string(size)] = std::holds_alternative<IntSet>(wit)
                                      ? to_string(std::get<IntSet>(wit))
                                      : to_string(std::get<GroupSet>(wit));
    j["witnesses"] = std::move(w);

    std::filesystem::create_directories(dir);
    const auto path =
        dir / cache_cell_name(range.h, range.k, range.restricted, range.group, range.search_bound);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << j.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

std::optional<SizeRange> cache_load(const std::filesystem::path& dir, Int h, Int k,
                                    bool restricted, const std::optional<GroupSpec>& group,
                                    Int n) {
    const auto g = normalized(group);
    const auto path = dir / cache_cell_name(h, k, restricted, g, n);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        const json j = json::parse(in);
        if (j.at("format") != "sumrange.size_range" || j.at("format_version") != 1)
            return std::nullopt;
        if (j.at("h").get<Int>() != h || j.at("k").get<Int>() != k ||
            j.at("restricted").get<bool>() != restricted ||
            j.at("search_bound").get<Int>() != n || j.at("group").get<std::string>() != group_tag(g))
            return std::nullopt;

        SizeRange r;
        r.h = h;
        r.k = k;
        r.restricted = restricted;
        r.group = g;
        r.search_bound = n;
        r.complete = j.at("complete").get<bool>();
        r.sizes = j.at("sizes").get<std::vector<Int>>();
        const auto& w = j.at("witnesses");
        for (Int size : r.sizes) {
            const std::string text = w.at(std::to_string(size)).get<std::string>();
            SetValue wit = g ? SetValue(parse_group_set(text, *g)) : SetValue(parse_int_set(text));
            // cache hits are only trusted after one witness per size recomputes
            if (witness_size(wit, h, restricted) != size) return std::nullopt;
            r.witnesses.emplace(size, std::move(wit));
        }
        return r;
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace sumrange
