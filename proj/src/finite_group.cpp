#include "gpcayley/finite_group.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace gpcayley {

namespace {

std::uint64_t next_group_id() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1);
}

std::string index_triple(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

} // namespace

FiniteGroup FiniteGroup::finalize(Data data) {
    const int n = data.order;
    if (n <= 0)
        throw_error(ErrorCode::ZeroOrder, "group order must be positive");
    if (n > kMaxGroupOrder)
        throw_error(ErrorCode::TooLarge, "group order " + std::to_string(n) + " exceeds bound " +
                                             std::to_string(kMaxGroupOrder));

    auto at = [&](int i, int j) { return data.table[static_cast<std::size_t>(i) * n + j]; };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) < 0 || at(i, j) >= n)
                throw_error(ErrorCode::MalformedTable, "table[" + std::to_string(i) + "][" +
                                                           std::to_string(j) + "] = " +
                                                           std::to_string(at(i, j)) +
                                                           " is out of range");

    const int e = data.identity;
    if (e < 0 || e >= n)
        throw_error(ErrorCode::NoIdentity, "identity index " + std::to_string(e) + " out of range");
    for (int i = 0; i < n; ++i) {
        if (at(e, i) != i)
            throw_error(ErrorCode::NoIdentity, "table[e][" + std::to_string(i) +
                                                   "] != " + std::to_string(i) +
                                                   "; given identity is not left-neutral");
        if (at(i, e) != i)
            throw_error(ErrorCode::NoIdentity, "table[" + std::to_string(i) +
                                                   "][e] != " + std::to_string(i) +
                                                   "; given identity is not right-neutral");
    }

    data.inverses.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (at(i, j) == e && at(j, i) == e) {
                data.inverses[i] = j;
                break;
            }
        }
        if (data.inverses[i] < 0)
            throw_error(ErrorCode::NoInverse,
                        "element " + std::to_string(i) + " has no two-sided inverse");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int ij = at(i, j);
            for (int k = 0; k < n; ++k)
                if (at(ij, k) != at(i, at(j, k)))
                    throw_error(ErrorCode::NotAssociative,
                                "witness triple (i,j,k) = " + index_triple(i, j, k));
        }

    if (data.labels.empty()) {
        data.labels.resize(n);
        for (int i = 0; i < n; ++i)
            data.labels[i] = (i == e) ? "e" : "g" + std::to_string(i);
    } else {
        if (static_cast<int>(data.labels.size()) != n)
            throw_error(ErrorCode::MalformedTable, "got " + std::to_string(data.labels.size()) +
                                                       " labels for " + std::to_string(n) +
                                                       " elements");
        auto sorted = data.labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw_error(ErrorCode::MalformedTable, "duplicate element label \"" + *dup + "\"");
    }

    data.id = next_group_id();
    return FiniteGroup(std::make_shared<const Data>(std::move(data)));
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, int identity,
                                    std::vector<std::string> labels) {
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw_error(ErrorCode::MalformedTable, "empty table");
    Data data;
    data.order = n;
    data.identity = identity;
    data.labels = std::move(labels);
    data.table.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw_error(ErrorCode::MalformedTable, "table is not square: row of length " +
                                                       std::to_string(row.size()) + " in a " +
                                                       std::to_string(n) + "-element group");
        data.table.insert(data.table.end(), row.begin(), row.end());
    }
    return finalize(std::move(data));
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n <= 0)
        throw_error(ErrorCode::ZeroOrder, "cyclic(" + std::to_string(n) + ")");
    Data data;
    data.order = n;
    data.identity = 0;
    data.table.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            data.table[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    data.labels.resize(n);
    for (int i = 0; i < n; ++i)
        data.labels[i] = (i == 0) ? "e" : (i == 1 ? "a" : "a" + std::to_string(i));
    return finalize(std::move(data));
}

FiniteGroup FiniteGroup::symmetric(int n, int max_n) {
    if (n <= 0)
        throw_error(ErrorCode::ZeroOrder, "symmetric(" + std::to_string(n) + ")");
    if (n > max_n)
        throw_error(ErrorCode::TooLarge, "symmetric(" + std::to_string(n) + ") exceeds bound n <= " +
                                             std::to_string(max_n));

    std::vector<std::vector<int>> perms; // one-line notation, values 0..n-1
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    const int order = static_cast<int>(perms.size());
    Data data;
    data.order = order;
    data.identity = 0; // identity permutation is lexicographically first
    data.table.resize(static_cast<std::size_t>(order) * order);

    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };

    std::vector<int> composed(n);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            for (int x = 0; x < n; ++x)
                composed[x] = perms[i][perms[j][x]]; // (p_i * p_j)(x) = p_i(p_j(x))
            data.table[static_cast<std::size_t>(i) * order + j] = index_of(composed);
        }

    data.labels.resize(order);
    data.labels[0] = "e";
    for (int i = 1; i < order; ++i)
        data.labels[i] = "b" + std::to_string(i);
    return finalize(std::move(data));
}

FiniteGroup FiniteGroup::direct_product(const std::vector<FiniteGroup>& factors) {
    if (factors.empty())
        throw_error(ErrorCode::EmptyFactorList, "direct_product of no factors");

    long long order = 1;
    for (const auto& f : factors) {
        order *= f.order();
        if (order > kMaxGroupOrder)
            throw_error(ErrorCode::TooLarge, "direct product order exceeds bound " +
                                                 std::to_string(kMaxGroupOrder));
    }
    const int n = static_cast<int>(order);
    const int k = static_cast<int>(factors.size());

    // Row-major tuple enumeration: index = ((c_0 * |F_1| + c_1) * |F_2| + c_2) ...
    auto decode = [&](int idx) {
        std::vector<int> c(k);
        for (int f = k - 1; f >= 0; --f) {
            c[f] = idx % factors[f].order();
            idx /= factors[f].order();
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int idx = 0;
        for (int f = 0; f < k; ++f)
            idx = idx * factors[f].order() + c[f];
        return idx;
    };

    Data data;
    data.order = n;
    data.table.resize(static_cast<std::size_t>(n) * n);
    std::vector<int> prod(k);
    for (int i = 0; i < n; ++i) {
        const auto a = decode(i);
        for (int j = 0; j < n; ++j) {
            const auto b = decode(j);
            for (int f = 0; f < k; ++f)
                prod[f] = factors[f].mul(a[f], b[f]);
            data.table[static_cast<std::size_t>(i) * n + j] = encode(prod);
        }
    }

    std::vector<int> ident(k);
    for (int f = 0; f < k; ++f)
        ident[f] = factors[f].identity();
    data.identity = encode(ident);

    data.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto c = decode(i);
        std::string label = "(";
        for (int f = 0; f < k; ++f) {
            if (f > 0)
                label += ",";
            label += factors[f].label(c[f]);
        }
        label += ")";
        data.labels[i] = label;
    }
    return finalize(std::move(data));
}

GroupElement FiniteGroup::mul(const GroupElement& a, const GroupElement& b) const {
    if (a.group_id != data_->id || b.group_id != data_->id)
        throw_error(ErrorCode::BadElementIndex, "elements belong to a different group");
    return GroupElement{data_->id, mul(a.index, b.index)};
}

int FiniteGroup::element_order(int a) const {
    check_index(a);
    int k = 1;
    int acc = a;
    while (acc != data_->identity) {
        acc = mul(acc, a);
        ++k;
    }
    return k;
}

std::vector<int> FiniteGroup::element_order_multiset() const {
    std::vector<int> orders(data_->order);
    for (int i = 0; i < data_->order; ++i)
        orders[i] = element_order(i);
    std::sort(orders.begin(), orders.end());
    return orders;
}

bool FiniteGroup::is_abelian() const {
    for (int i = 0; i < data_->order; ++i)
        for (int j = i + 1; j < data_->order; ++j)
            if (mul(i, j) != mul(j, i))
                return false;
    return true;
}

std::optional<int> FiniteGroup::index_of_label(std::string_view label) const {
    for (int i = 0; i < data_->order; ++i)
        if (data_->labels[i] == label)
            return i;
    return std::nullopt;
}

namespace {

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the closure of what we have.
std::vector<int> generating_sequence(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> gens;
    std::vector<char> in_closure(n, 0);
    in_closure[g.identity()] = 1;
    int covered = 1;

    auto close_over = [&](int seed) {
        if (!in_closure[seed]) {
            in_closure[seed] = 1;
            ++covered;
        }
        std::vector<int> queue;
        for (int x = 0; x < n; ++x)
            if (in_closure[x])
                queue.push_back(x);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (int gen : gens) {
                const int y = g.mul(queue[head], gen);
                if (!in_closure[y]) {
                    in_closure[y] = 1;
                    ++covered;
                    queue.push_back(y);
                }
            }
        }
    };

    while (covered < n) {
        int next = 0;
        while (in_closure[next])
            ++next;
        gens.push_back(next);
        close_over(next);
    }
    return gens;
}

struct IsoSearch {
    const FiniteGroup& g;
    const FiniteGroup& h;
    std::vector<int> gens;            // generating sequence of g
    std::vector<int> g_orders;        // element orders in g
    std::vector<int> h_orders;        // element orders in h
    std::vector<int> map;             // partial map g -> h, -1 when unset
    std::vector<int> used;            // partial inverse map h -> g, -1 when unset

    bool extend(std::size_t gen_pos) {
        if (gen_pos == gens.size())
            return full_check();
        const int gen = gens[gen_pos];
        for (int cand = 0; cand < h.order(); ++cand) {
            if (used[cand] >= 0 || h_orders[cand] != g_orders[gen])
                continue;
            auto saved_map = map;
            auto saved_used = used;
            if (assign_and_close(gen, cand, gen_pos) && extend(gen_pos + 1))
                return true;
            map = std::move(saved_map);
            used = std::move(saved_used);
        }
        return false;
    }

    // Sets map[gen] = cand and closes the partial map under right
    // multiplication by the generators assigned so far. Fails on any
    // homomorphism or injectivity conflict.
    bool assign_and_close(int gen, int cand, std::size_t gen_pos) {
        if (map[gen] >= 0)
            return map[gen] == cand;
        map[gen] = cand;
        used[cand] = gen;

        std::vector<int> queue;
        for (int x = 0; x < g.order(); ++x)
            if (map[x] >= 0)
                queue.push_back(x);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int a = queue[head];
            for (std::size_t i = 0; i <= gen_pos; ++i) {
                const int b = g.mul(a, gens[i]);
                const int y = h.mul(map[a], map[gens[i]]);
                if (map[b] < 0) {
                    if (used[y] >= 0)
                        return false; // y already the image of another element
                    map[b] = y;
                    used[y] = b;
                    queue.push_back(b);
                } else if (map[b] != y) {
                    return false;
                }
            }
        }
        return true;
    }

    bool full_check() const {
        for (int x = 0; x < g.order(); ++x)
            if (map[x] < 0)
                return false;
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                if (map[g.mul(a, b)] != h.mul(map[a], map[b]))
                    return false;
        return true;
    }
};

} // namespace

std::optional<ElementMap> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                         IsoDiagnostics* diag, int size_warning_bound) {
    if (g.order() != h.order())
        return std::nullopt;
    if (diag && g.order() > size_warning_bound)
        diag->warnings.push_back("SizeWarning: isomorphism search on groups of order " +
                                 std::to_string(g.order()) + " (bound " +
                                 std::to_string(size_warning_bound) + ")");
    if (g.element_order_multiset() != h.element_order_multiset())
        return std::nullopt;

    IsoSearch search{g, h, generating_sequence(g), {}, {}, {}, {}};
    search.g_orders.resize(g.order());
    search.h_orders.resize(h.order());
    for (int i = 0; i < g.order(); ++i)
        search.g_orders[i] = g.element_order(i);
    for (int i = 0; i < h.order(); ++i)
        search.h_orders[i] = h.element_order(i);
    search.map.assign(g.order(), -1);
    search.used.assign(h.order(), -1);
    search.map[g.identity()] = h.identity();
    search.used[h.identity()] = g.identity();

    if (search.extend(0))
        return search.map;
    return std::nullopt;
}

} // namespace gpcayley
