#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcayley/errors.hpp"

namespace gpcayley {

class FiniteGroup;

// An element tagged with the group it belongs to. Elements of different
// groups never compare equal, copies of one group share an id.
struct GroupElement {
    std::uint64_t group_id = 0;
    int index = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// A finite group as a validated multiplication table. Immutable after
// construction; copies are cheap (shared immutable state) and keep the
// original group id. Construction rejects anything that is not a group:
// malformed tables, missing identity or inverses, associativity violations.
//
// Orders are capped at kMaxGroupOrder so that the O(order^3) associativity
// check stays affordable.
class FiniteGroup {
public:
    static constexpr int kMaxGroupOrder = 512;

    // table[i][j] = index of g_i * g_j.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& table, int identity,
                                  std::vector<std::string> labels = {});

    // Z_n as residues 0..n-1 under addition; labels e, a, a2, ...
    static FiniteGroup cyclic(int n);

    // All permutations of {1..n} in lexicographic one-line order, composed as
    // functions: (p*q)(x) = p(q(x)). Labels e, b1, b2, ... in that order.
    // Bounded at n <= max_n because the table has n! rows.
    static FiniteGroup symmetric(int n, int max_n = 5);

    // Componentwise product on tuples of factor elements, enumerated
    // row-major (last factor varies fastest). Labels are tuples of factor
    // labels, e.g. "(a,e)".
    static FiniteGroup direct_product(const std::vector<FiniteGroup>& factors);

    int order() const noexcept { return data_->order; }
    int identity() const noexcept { return data_->identity; }
    std::uint64_t id() const noexcept { return data_->id; }

    int mul(int a, int b) const {
        check_index(a);
        check_index(b);
        return data_->table[static_cast<std::size_t>(a) * data_->order + b];
    }

    int inv(int a) const {
        check_index(a);
        return data_->inverses[a];
    }

    GroupElement element(int index) const {
        check_index(index);
        return GroupElement{data_->id, index};
    }

    GroupElement mul(const GroupElement& a, const GroupElement& b) const;

    // Smallest k >= 1 with a^k = e.
    int element_order(int a) const;

    // Sorted list of element orders; an isomorphism invariant.
    std::vector<int> element_order_multiset() const;

    bool is_abelian() const;

    const std::string& label(int a) const {
        check_index(a);
        return data_->labels[a];
    }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    std::optional<int> index_of_label(std::string_view label) const;

private:
    struct Data {
        int order = 0;
        int identity = 0;
        std::uint64_t id = 0;
        std::vector<int> table; // row-major order x order
        std::vector<int> inverses;
        std::vector<std::string> labels;
    };

    explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

    void check_index(int a) const {
        if (a < 0 || a >= data_->order)
            throw_error(ErrorCode::BadElementIndex,
                        "element index " + std::to_string(a) + " out of range for group of order " +
                            std::to_string(data_->order));
    }

    static FiniteGroup finalize(Data data);

    std::shared_ptr<const Data> data_;
};

// Diagnostics that are warnings, not errors: operations complete but want to
// flag something (e.g. an isomorphism search above its intended size bound).
struct IsoDiagnostics {
    std::vector<std::string> warnings;
};

using ElementMap = std::vector<int>; // domain index -> codomain index

// Decides isomorphism of two validated finite groups and returns a witness
// bijective homomorphism when one exists. Rejects fast on order or
// element-order-multiset mismatch, then backtracks on generator images
// constrained by element order. Emits a SizeWarning diagnostic above
// size_warning_bound (the search still runs).
std::optional<ElementMap> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                                         IsoDiagnostics* diag = nullptr,
                                         int size_warning_bound = 512);

} // namespace gpcayley
