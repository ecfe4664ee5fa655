#include "combinlab/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace combinlab {

namespace {

Ids all_ids(const ComparisonOracle& cmp) {
    Ids ids(cmp.size());
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return ids;
}

std::size_t serial_max(const Ids& ids, ComparisonOracle& cmp) {
    std::size_t best = ids.at(0);
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (cmp.greater(ids[i], best)) best = ids[i];
    return best;
}

std::size_t serial_min(const Ids& ids, ComparisonOracle& cmp) {
    std::size_t best = ids.at(0);
    for (std::size_t i = 1; i < ids.size(); ++i)
        if (cmp.less(ids[i], best)) best = ids[i];
    return best;
}

void check_t(std::size_t t, std::size_t n) {
    if (t < 1 || t > n) throw InputError("t out of range");
}

}  // namespace

KnockoutTree knockout(const Ids& entrants, ComparisonOracle& cmp) {
    if (entrants.empty()) throw InputError("knockout needs at least one entrant");
    KnockoutTree tree;
    tree.beaten.assign(cmp.size(), {});
    tree.lost_round.assign(cmp.size(), 0);
    Ids current = entrants;
    int round = 0;
    while (current.size() > 1) {
        ++round;
        tree.rounds.push_back(current);
        Ids next;
        for (std::size_t i = 0; i + 1 < current.size(); i += 2) {
            std::size_t w = current[i], l = current[i + 1];
            if (cmp.less(w, l)) std::swap(w, l);
            tree.beaten[w].push_back(l);
            tree.lost_round[l] = round;
            ++tree.matches;
            next.push_back(w);
        }
        if (current.size() % 2 == 1) next.push_back(current.back());
        current = std::move(next);
    }
    tree.rounds.push_back(current);
    tree.champion = current[0];
    return tree;
}

MaxResult tournament_max(ComparisonOracle& cmp) {
    MaxResult r;
    r.tree = knockout(all_ids(cmp), cmp);
    r.index = r.tree.champion;
    return r;
}

std::pair<std::size_t, std::size_t> max_and_min(ComparisonOracle& cmp) {
    std::size_t n = cmp.size();
    if (n < 2) throw InputError("max_and_min needs n >= 2");
    Ids winners, losers;
    for (std::size_t i = 0; i + 1 < n; i += 2) {
        if (cmp.greater(i, i + 1)) {
            winners.push_back(i);
            losers.push_back(i + 1);
        } else {
            winners.push_back(i + 1);
            losers.push_back(i);
        }
    }
    if (n % 2 == 1) {
        winners.push_back(n - 1);
        losers.push_back(n - 1);
    }
    return {serial_max(winners, cmp), serial_min(losers, cmp)};
}

std::pair<std::size_t, std::size_t> top_two(ComparisonOracle& cmp) {
    if (cmp.size() < 2) throw InputError("top_two needs n >= 2");
    KnockoutTree tree = knockout(all_ids(cmp), cmp);
    return {tree.champion, serial_max(tree.beaten[tree.champion], cmp)};
}

std::array<std::size_t, 3> top_three(ComparisonOracle& cmp) {
    if (cmp.size() < 3) throw InputError("top_three needs n >= 3");
    KnockoutTree tree = knockout(all_ids(cmp), cmp);
    const Ids& contenders = tree.beaten[tree.champion];  // in order of the round they lost
    // Serial mini-tournament; remember whom each holder beat directly.
    std::size_t holder = contenders[0];
    Ids holder_beat;
    for (std::size_t i = 1; i < contenders.size(); ++i) {
        std::size_t c = contenders[i];
        if (cmp.greater(c, holder)) {
            holder_beat = {holder};
            holder = c;
        } else {
            holder_beat.push_back(c);
        }
    }
    std::size_t second = holder;
    Ids pool = tree.beaten[second];
    pool.insert(pool.end(), holder_beat.begin(), holder_beat.end());
    return {tree.champion, second, serial_max(pool, cmp)};
}

std::size_t select_t_tournament(std::size_t t, ComparisonOracle& cmp) {
    std::size_t n = cmp.size();
    check_t(t, n);
    if (t == 1) return tournament_max(cmp).index;
    std::size_t m = n - t + 2;
    std::size_t width = pow2(ceil_log2(m));
    // node[i] holds the winning leaf of the subtree; leaves hold entrant ids.
    std::vector<std::optional<std::size_t>> leaf(width), node(2 * width);
    for (std::size_t i = 0; i < m; ++i) leaf[i] = i;
    auto play = [&](std::size_t i) {
        const auto& a = node[2 * i];
        const auto& b = node[2 * i + 1];
        if (!a || !b)
            node[i] = a ? a : b;
        else
            node[i] = cmp.greater(*leaf[*a], *leaf[*b]) ? a : b;
    };
    for (std::size_t i = 0; i < width; ++i)
        if (leaf[i]) node[width + i] = i;
    for (std::size_t i = width - 1; i >= 1; --i) play(i);
    auto replay = [&](std::size_t slot) {
        node[width + slot] = leaf[slot] ? std::optional<std::size_t>(slot) : std::nullopt;
        for (std::size_t i = (width + slot) / 2; i >= 1; i /= 2) play(i);
    };
    std::size_t next = m;
    for (std::size_t r = 0; r + 2 < t; ++r) {
        std::size_t slot = *node[1];
        leaf[slot] = next++;
        replay(slot);
    }
    std::size_t slot = *node[1];
    leaf[slot].reset();
    replay(slot);
    return *leaf[*node[1]];
}

namespace {

using Item = std::optional<std::size_t>;  // nullopt is a -infinity sentinel

struct Selection {
    std::size_t answer;             // position in the item list
    std::vector<signed char> side;  // +1 above the answer, -1 below, 0 the answer
};

class LinearSelector {
public:
    explicit LinearSelector(ComparisonOracle& cmp) : cmp_(cmp) {}

    bool greater(const Item& x, const Item& y) {
        if (!x) return false;
        if (!y) return true;
        return cmp_.greater(*x, *y);
    }

    // Ascending order; real items sorted by merge insertion, sentinels first.
    std::vector<std::size_t> sort_positions(const std::vector<Item>& items, const std::vector<std::size_t>& pos) {
        std::vector<std::size_t> out, real_pos;
        Ids real;
        for (std::size_t p : pos) {
            if (items[p]) {
                real.push_back(*items[p]);
                real_pos.push_back(p);
            } else {
                out.push_back(p);
            }
        }
        Ids sorted = merge_insertion_sort(real, cmp_);
        for (std::size_t id : sorted)
            for (std::size_t k = 0; k < real.size(); ++k)
                if (real[k] == id) {
                    out.push_back(real_pos[k]);
                    break;
                }
        return out;
    }

    Selection select(const std::vector<Item>& input, std::size_t t) {
        std::size_t size = input.size();
        if (size <= 1024) {
            std::vector<std::size_t> all(size);
            std::iota(all.begin(), all.end(), std::size_t{0});
            auto order = sort_positions(input, all);
            std::size_t at = size - t;
            Selection s{order[at], std::vector<signed char>(size, 0)};
            for (std::size_t r = 0; r < size; ++r)
                s.side[order[r]] = static_cast<signed char>(r < at ? -1 : (r > at ? 1 : 0));
            return s;
        }
        std::vector<Item> items = input;
        std::size_t groups = (size + 6) / 7;
        if (groups % 2 == 0) ++groups;
        items.resize(groups * 7);
        std::size_t q = (groups - 1) / 2;

        std::vector<std::vector<std::size_t>> sorted(groups);
        std::vector<Item> medians(groups);
        for (std::size_t g = 0; g < groups; ++g) {
            std::vector<std::size_t> pos(7);
            std::iota(pos.begin(), pos.end(), g * 7);
            sorted[g] = sort_positions(items, pos);
            medians[g] = items[sorted[g][3]];
        }
        Selection mid = select(medians, q + 1);
        std::size_t xg = mid.answer;
        std::size_t xpos = sorted[xg][3];
        const Item x = items[xpos];

        std::vector<signed char> side(items.size(), 0);
        for (std::size_t g = 0; g < groups; ++g) {
            const auto& s = sorted[g];
            if (g == xg) {
                for (int r = 0; r < 3; ++r) side[s[r]] = -1;
                for (int r = 4; r < 7; ++r) side[s[r]] = 1;
                continue;
            }
            if (mid.side[g] > 0) {
                for (int r = 3; r < 7; ++r) side[s[r]] = 1;
                classify_triple(items, {s[0], s[1], s[2]}, x, side);
            } else {
                for (int r = 0; r < 4; ++r) side[s[r]] = -1;
                classify_triple(items, {s[4], s[5], s[6]}, x, side);
            }
        }

        std::vector<std::size_t> above, below;
        for (std::size_t p = 0; p < items.size(); ++p) {
            if (p == xpos) continue;
            (side[p] > 0 ? above : below).push_back(p);
        }
        std::size_t r = above.size();
        Selection out{xpos, std::vector<signed char>(items.size(), 0)};
        if (t == r + 1) {
            out.side = side;
        } else {
            bool up = t < r + 1;
            const auto& part = up ? above : below;
            std::vector<Item> sub(part.size());
            for (std::size_t k = 0; k < part.size(); ++k) sub[k] = items[part[k]];
            Selection inner = select(sub, up ? t : t - 1 - r);
            out.answer = part[inner.answer];
            for (std::size_t k = 0; k < part.size(); ++k) out.side[part[k]] = inner.side[k];
            const auto& other = up ? below : above;
            signed char s = up ? -1 : 1;
            for (std::size_t p : other) out.side[p] = s;
            out.side[xpos] = s;
        }
        out.side.resize(size);
        return out;
    }

private:
    // Sorted triple: compare the middle with x first, then one end.
    void classify_triple(const std::vector<Item>& items, std::array<std::size_t, 3> tri, const Item& x,
                         std::vector<signed char>& side) {
        if (greater(items[tri[1]], x)) {
            side[tri[1]] = side[tri[2]] = 1;
            side[tri[0]] = greater(items[tri[0]], x) ? 1 : -1;
        } else {
            side[tri[1]] = side[tri[0]] = -1;
            side[tri[2]] = greater(items[tri[2]], x) ? 1 : -1;
        }
    }

    ComparisonOracle& cmp_;
};

}  // namespace

std::size_t select_t_linear(std::size_t t, ComparisonOracle& cmp) {
    std::size_t n = cmp.size();
    check_t(t, n);
    std::vector<Item> items(n);
    for (std::size_t i = 0; i < n; ++i) items[i] = i;
    LinearSelector sel(cmp);
    Selection s = sel.select(items, t);
    return *items[s.answer];
}

std::uint64_t max_and_min_bound(std::uint64_t n) { return (3 * n + 1) / 2 - 2; }

std::uint64_t top_two_bound(std::uint64_t n) { return n - 2 + static_cast<std::uint64_t>(ceil_log2(n)); }

std::uint64_t top_three_bound(std::uint64_t n) { return n + 2 * static_cast<std::uint64_t>(ceil_log2(n)) - 3; }

std::uint64_t select_tournament_bound(std::uint64_t n, std::uint64_t t) {
    return n - t + (t - 1) * static_cast<std::uint64_t>(ceil_log2(n + 2 - t));
}

std::int64_t select_linear_bound(std::int64_t n) { return 15 * n - 163; }

}  // namespace combinlab
