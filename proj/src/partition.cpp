#include "homog/partition.hpp"

#include <algorithm>
#include <map>

namespace homog {

namespace {

// Byte key describing how a vertex sits inside the relation instances, with
// other entries replaced by their current cell indices.
std::string vertex_key(const FinStructure& s, int v, const std::vector<int>& cell_of) {
    std::vector<std::string> items;
    const auto& sig = s.signature();
    for (int sym = 0; sym < sig.size(); ++sym) {
        const auto& def = sig.symbol(sym);
        for (TupleCode c : s.stored(sym)) {
            std::vector<int> t = decode_tuple(c, def.arity);
            auto it = std::find(t.begin(), t.end(), v);
            if (it == t.end()) continue;
            std::string item;
            item.push_back(static_cast<char>(sym));
            if (def.symmetric) {
                std::vector<int> cls;
                for (int e : t) cls.push_back(cell_of[static_cast<std::size_t>(e)]);
                std::sort(cls.begin(), cls.end());
                for (int cl : cls) item.push_back(static_cast<char>(cl));
            } else {
                item.push_back(static_cast<char>(it - t.begin()));
                for (int e : t) item.push_back(static_cast<char>(cell_of[static_cast<std::size_t>(e)]));
            }
            items.push_back(std::move(item));
        }
    }
    std::sort(items.begin(), items.end());
    std::string key;
    for (const auto& i : items) {
        key.push_back(static_cast<char>(i.size()));
        key += i;
    }
    return key;
}

}  // namespace

std::vector<std::vector<int>> refine_ordered(const FinStructure& s,
                                             std::vector<std::vector<int>> cells) {
    const int n = s.size();
    while (true) {
        std::vector<int> cell_of(static_cast<std::size_t>(n), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

        std::vector<std::vector<int>> next;
        bool split = false;
        for (const auto& cell : cells) {
            if (cell.size() == 1) { next.push_back(cell); continue; }
            std::map<std::string, std::vector<int>> groups;
            for (int v : cell) groups[vertex_key(s, v, cell_of)].push_back(v);
            if (groups.size() > 1) split = true;
            for (auto& [key, members] : groups) {
                std::sort(members.begin(), members.end());
                next.push_back(std::move(members));
            }
        }
        cells = std::move(next);
        if (!split) return cells;
    }
}

Partition refine_partition(const FinStructure& s) {
    Partition p;
    const int n = s.size();
    if (n == 0) return p;
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    p.classes = refine_ordered(s, {all});
    p.class_of.resize(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < p.classes.size(); ++c)
        for (int v : p.classes[c]) p.class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    return p;
}

}  // namespace homog
