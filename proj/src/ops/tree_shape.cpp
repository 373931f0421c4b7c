#include "bbox/ops/tree_shape.hpp"

#include <algorithm>
#include <map>

namespace bbox::ops {

namespace {

struct NodeInfo {
    std::vector<int> lengths;
    int size = 1;
    std::string code;
};

// Traversal priority: lengths sequence lex-descending, then subtree size,
// then canonical code.
bool priority_before(const NodeInfo& a, const NodeInfo& b) {
    if (a.lengths != b.lengths)
        return std::lexicographical_compare(b.lengths.begin(), b.lengths.end(),
                                            a.lengths.begin(), a.lengths.end());
    if (a.size != b.size) return a.size > b.size;
    return a.code > b.code;
}

} // namespace

TreeShape::TreeShape(std::vector<int> parent) : parent_(std::move(parent)) {
    const int k = size();
    children_.assign(static_cast<std::size_t>(k), {});
    for (int v = 1; v < k; ++v) children_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])].push_back(v);

    std::vector<NodeInfo> info(static_cast<std::size_t>(k));
    std::vector<int> post;
    {
        std::vector<std::pair<int, std::size_t>> st;
        st.emplace_back(0, 0);
        while (!st.empty()) {
            auto& [v, ci] = st.back();
            if (ci < children_[static_cast<std::size_t>(v)].size()) {
                int c = children_[static_cast<std::size_t>(v)][ci++];
                st.emplace_back(c, 0);
            } else {
                post.push_back(v);
                st.pop_back();
            }
        }
    }

    for (int v : post) {
        auto& me = info[static_cast<std::size_t>(v)];
        auto& ch = children_[static_cast<std::size_t>(v)];
        if (ch.empty()) {
            me.lengths = {0};
            me.size = 1;
            me.code = "()";
            continue;
        }
        std::sort(ch.begin(), ch.end(), [&](int a, int b) {
            return priority_before(info[static_cast<std::size_t>(a)], info[static_cast<std::size_t>(b)]);
        });
        me.size = 1;
        me.lengths.clear();
        me.code = "(";
        for (int c : ch) {
            const auto& ci = info[static_cast<std::size_t>(c)];
            me.size += ci.size;
            for (int L : ci.lengths) me.lengths.push_back(L + 1);
            me.code += ci.code;
        }
        me.code += ")";
        std::sort(me.lengths.begin(), me.lengths.end(), std::greater<int>());
    }

    lengths_.resize(static_cast<std::size_t>(k));
    for (int v = 0; v < k; ++v) lengths_[static_cast<std::size_t>(v)] = info[static_cast<std::size_t>(v)].lengths;

    depth_.assign(static_cast<std::size_t>(k), 0);
    preorder_.clear();
    rank_in_preorder_.assign(static_cast<std::size_t>(k), -1);
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        rank_in_preorder_[static_cast<std::size_t>(v)] = static_cast<int>(preorder_.size());
        preorder_.push_back(v);
        const auto& ch = children_[static_cast<std::size_t>(v)];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            depth_[static_cast<std::size_t>(*it)] = depth_[static_cast<std::size_t>(v)] + 1;
            stack.push_back(*it);
        }
    }
}

// Canonical code of the prefix-induced subtree of `id` (members are the first
// s preorder ids). Children in canonical shape order keep their relative
// order in the prefix. `order_out` unused; kept for symmetry with callers.
std::string TreeShape::prefix_code(int id, int s, std::vector<int>&) const {
    std::string out = "(";
    for (int c : children_[static_cast<std::size_t>(id)]) {
        if (rank_in_preorder_[static_cast<std::size_t>(c)] < s) {
            std::vector<int> dummy;
            out += prefix_code(c, s, dummy);
        }
    }
    out += ")";
    return out;
}

int TreeShape::active_label(const std::vector<std::int32_t>& parent_by_label, int s) const {
    if (s >= size() || s < 1) return 0;
    const int active_pos = parent_[static_cast<std::size_t>(preorder_[static_cast<std::size_t>(s)])];

    // decode the labeled partial tree
    const int nlab = static_cast<int>(parent_by_label.size()) - 1;
    std::vector<std::vector<std::int32_t>> kids(static_cast<std::size_t>(nlab) + 1);
    int count = 0;
    for (std::int32_t v = 1; v <= nlab; ++v) {
        if (parent_by_label[static_cast<std::size_t>(v)] < 0) continue;
        ++count;
        if (v != 1) kids[static_cast<std::size_t>(parent_by_label[static_cast<std::size_t>(v)])].push_back(v);
    }
    if (count != s) return 0;

    // canonical codes of labeled subtrees (children sorted by code)
    std::vector<std::string> lab_code(static_cast<std::size_t>(nlab) + 1);
    // post-order over labels
    {
        std::vector<std::pair<std::int32_t, std::size_t>> st;
        st.emplace_back(1, 0);
        while (!st.empty()) {
            auto& [v, ci] = st.back();
            if (ci < kids[static_cast<std::size_t>(v)].size()) {
                std::int32_t c = kids[static_cast<std::size_t>(v)][ci++];
                st.emplace_back(c, 0);
            } else {
                std::vector<std::string> cs;
                for (std::int32_t c : kids[static_cast<std::size_t>(v)])
                    cs.push_back(lab_code[static_cast<std::size_t>(c)]);
                std::sort(cs.begin(), cs.end());
                std::string code = "(";
                for (auto& x : cs) code += x;
                code += ")";
                lab_code[static_cast<std::size_t>(v)] = std::move(code);
                st.pop_back();
            }
        }
    }

    // canonical codes of prefix subtrees; also collect per-node sorted codes
    std::vector<int> prefix_nodes(preorder_.begin(), preorder_.begin() + s);
    std::vector<std::string> pre_code(static_cast<std::size_t>(size()));
    for (auto it = prefix_nodes.rbegin(); it != prefix_nodes.rend(); ++it) {
        int v = *it;
        std::vector<std::string> cs;
        for (int c : children_[static_cast<std::size_t>(v)])
            if (rank_in_preorder_[static_cast<std::size_t>(c)] < s)
                cs.push_back(pre_code[static_cast<std::size_t>(c)]);
        std::sort(cs.begin(), cs.end());
        std::string code = "(";
        for (auto& x : cs) code += x;
        code += ")";
        pre_code[static_cast<std::size_t>(v)] = std::move(code);
    }

    if (pre_code[0] != lab_code[1]) return 0;

    // descend from the root to the active position, mapping to labels
    std::vector<int> chain; // shape ids root..active_pos
    for (int v = active_pos; v != -1; v = parent_[static_cast<std::size_t>(v)]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());

    std::int32_t cur_label = 1;
    for (std::size_t step = 1; step < chain.size(); ++step) {
        int next_pos = chain[step];
        const std::string& need = pre_code[static_cast<std::size_t>(next_pos)];
        // uniqueness among prefix siblings; ambiguity would contradict the
        // active node being automorphism-fixed
        int shape_matches = 0;
        for (int c : children_[static_cast<std::size_t>(chain[step - 1])])
            if (rank_in_preorder_[static_cast<std::size_t>(c)] < s &&
                pre_code[static_cast<std::size_t>(c)] == need)
                ++shape_matches;
        if (shape_matches != 1) return 0;
        std::int32_t next_label = 0;
        int label_matches = 0;
        for (std::int32_t c : kids[static_cast<std::size_t>(cur_label)]) {
            if (lab_code[static_cast<std::size_t>(c)] == need) {
                ++label_matches;
                next_label = c;
            }
        }
        if (label_matches != 1) return 0;
        cur_label = next_label;
    }
    return cur_label;
}

std::vector<int> lengths_sequence_of(const std::vector<std::int32_t>& parent_by_label,
                                     std::int32_t v) {
    const int nlab = static_cast<int>(parent_by_label.size()) - 1;
    std::vector<std::vector<std::int32_t>> kids(static_cast<std::size_t>(nlab) + 1);
    for (std::int32_t u = 2; u <= nlab; ++u)
        if (parent_by_label[static_cast<std::size_t>(u)] > 0)
            kids[static_cast<std::size_t>(parent_by_label[static_cast<std::size_t>(u)])].push_back(u);

    // iterative post-order from v
    std::vector<std::vector<int>> result(static_cast<std::size_t>(nlab) + 1);
    std::vector<std::pair<std::int32_t, std::size_t>> st;
    st.emplace_back(v, 0);
    while (!st.empty()) {
        auto& [u, ci] = st.back();
        if (ci < kids[static_cast<std::size_t>(u)].size()) {
            st.emplace_back(kids[static_cast<std::size_t>(u)][ci++], 0);
        } else {
            auto& mine = result[static_cast<std::size_t>(u)];
            if (kids[static_cast<std::size_t>(u)].empty()) {
                mine = {0};
            } else {
                for (std::int32_t c : kids[static_cast<std::size_t>(u)])
                    for (int L : result[static_cast<std::size_t>(c)]) mine.push_back(L + 1);
                std::sort(mine.begin(), mine.end(), std::greater<int>());
            }
            st.pop_back();
        }
    }
    return result[static_cast<std::size_t>(v)];
}

} // namespace bbox::ops
