#include "cliffs/cliff.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>

#include "cliffs/error.hpp"

namespace cliffs {

std::string to_text(const Cliff& u) {
    bool digits = std::all_of(u.begin(), u.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string out;
    if (digits) {
        for (int x : u) out += static_cast<char>('0' + x);
        return out;
    }
    out = "c:";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(u[i]);
    }
    return out;
}

Cliff parse_cliff(const std::string& text) {
    Cliff u;
    if (text.empty() || text == "-") return u;
    if (text.rfind("c:", 0) == 0) {
        std::size_t pos = 2;
        if (pos == text.size()) return u;
        while (true) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start || pos - start > 9)
                throw Error(ErrorKind::Parse, "bad letter at position " + std::to_string(start));
            u.push_back(std::stoi(text.substr(start, pos - start)));
            if (pos == text.size()) break;
            if (text[pos] != ',')
                throw Error(ErrorKind::Parse, "expected ',' at position " + std::to_string(pos));
            ++pos;
        }
        return u;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorKind::Parse, "bad digit at position " + std::to_string(i));
        u.push_back(text[i] - '0');
    }
    return u;
}

long weight(const Cliff& u) {
    long w = 0;
    for (int x : u) w += x;
    return w;
}

bool is_cliff(const RangeMap& d, const Cliff& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] < 0 || u[i] > d(i + 1)) return false;
    return true;
}

void require_cliff(const RangeMap& d, const Cliff& u) {
    if (!is_cliff(d, u))
        throw Error(ErrorKind::InvalidCliff, to_text(u) + " is not a cliff of " + format(d));
}

Cliff zero_cliff(std::size_t n) { return Cliff(n, 0); }

Cliff top_cliff(const RangeMap& d, std::size_t n) {
    Cliff u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = d(i + 1);
    return u;
}

mpz_class cliff_count(const RangeMap& d, std::size_t n) {
    mpz_class c = 1;
    for (std::size_t i = 1; i <= n; ++i) c *= d(i) + 1;
    return c;
}

std::vector<Cliff> enumerate(const RangeMap& d, std::size_t n) {
    std::vector<Cliff> out;
    Cliff u(n, 0);
    Cliff top = top_cliff(d, n);
    while (true) {
        out.push_back(u);
        std::size_t i = n;
        while (i > 0 && u[i - 1] == top[i - 1]) {
            u[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++u[i - 1];
    }
    return out;
}

Cliff reduce(const RangeMap& d, const Cliff& u) {
    Cliff r(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) r[i] = std::min(u[i], d(i + 1));
    return r;
}

Cliff complement(const RangeMap& d, const Cliff& u) {
    require_cliff(d, u);
    Cliff c(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) c[i] = d(i + 1) - u[i];
    return c;
}

bool is_permutation(const Permutation& sigma) {
    std::vector<bool> seen(sigma.size() + 1, false);
    for (int x : sigma) {
        if (x < 1 || x > static_cast<int>(sigma.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

Cliff lehmer(const Permutation& sigma) {
    if (!is_permutation(sigma)) throw Error(ErrorKind::InvalidCliff, "not a permutation");
    std::size_t n = sigma.size();
    std::vector<std::size_t> pos(n + 1);
    for (std::size_t j = 0; j < n; ++j) pos[sigma[j]] = j;
    // u_i counts the entries smaller than i lying to the right of i.
    Cliff u(n, 0);
    for (int i = 1; i <= static_cast<int>(n); ++i)
        for (std::size_t j = pos[i] + 1; j < n; ++j)
            if (sigma[j] < i) ++u[i - 1];
    return u;
}

Permutation lehmer_inverse(const Cliff& u) {
    require_cliff(RangeMap::affine(1), u);
    // Insert values 1..n in turn: value i goes so that exactly u_i smaller
    // values sit to its right.
    Permutation sigma;
    for (std::size_t i = 0; i < u.size(); ++i)
        sigma.insert(sigma.end() - u[i], static_cast<int>(i + 1));
    return sigma;
}

std::size_t IncreasingTree::leaf_count() const {
    if (root < 0) return 1;
    std::size_t c = 0;
    for (const Node& nd : nodes)
        for (int ch : nd.children)
            if (ch < 0) ++c;
    return c;
}

std::string IncreasingTree::to_json() const {
    std::function<nlohmann::json(int)> rec = [&](int k) -> nlohmann::json {
        if (k < 0) return nullptr;
        nlohmann::json arr = nlohmann::json::array();
        arr.push_back(nodes[k].label);
        for (int ch : nodes[k].children) arr.push_back(rec(ch));
        return arr;
    };
    return rec(root).dump();
}

namespace {

void require_tree_map(const RangeMap& d) {
    RangeMapProperties p = properties(d);
    if (!p.rooted || !p.weakly_increasing)
        throw Error(ErrorKind::UnsupportedRangeMap,
                    format(d) + " is not rooted and weakly increasing");
}

// Leaves in left-to-right order as (parent node, child slot).
void collect_leaves(const IncreasingTree& t, int k, std::vector<std::pair<int, int>>& out) {
    const auto& ch = t.nodes[k].children;
    for (std::size_t s = 0; s < ch.size(); ++s) {
        if (ch[s] < 0)
            out.emplace_back(k, static_cast<int>(s));
        else
            collect_leaves(t, ch[s], out);
    }
}

}  // namespace

IncreasingTree tree_of(const RangeMap& d, const Cliff& u) {
    require_tree_map(d);
    require_cliff(d, u);
    IncreasingTree t;
    for (std::size_t k = 1; k <= u.size(); ++k) {
        IncreasingTree::Node nd;
        nd.label = static_cast<int>(k);
        nd.children.assign(d(k + 1) - d(k) + 1, -1);
        int id = static_cast<int>(t.nodes.size());
        t.nodes.push_back(nd);
        if (t.root < 0) {
            t.root = id;
            continue;
        }
        std::vector<std::pair<int, int>> leaves;
        collect_leaves(t, t.root, leaves);
        auto [parent, slot] = leaves[u[k - 1]];
        t.nodes[parent].children[slot] = id;
    }
    return t;
}

Cliff tree_inverse(const IncreasingTree& t) {
    IncreasingTree cur = t;
    Cliff rev;
    while (cur.root >= 0) {
        int last = static_cast<int>(cur.nodes.size()) - 1;
        for (int c : cur.nodes[last].children)
            if (c >= 0) throw Error(ErrorKind::DomainViolation, "tree is not increasing");
        if (last == cur.root) {
            rev.push_back(0);
            cur.nodes.pop_back();
            cur.root = -1;
            break;
        }
        int parent = -1, slot = -1;
        for (int k = 0; k < last && parent < 0; ++k)
            for (std::size_t s = 0; s < cur.nodes[k].children.size(); ++s)
                if (cur.nodes[k].children[s] == last) {
                    parent = k;
                    slot = static_cast<int>(s);
                }
        if (parent < 0) throw Error(ErrorKind::DomainViolation, "detached node");
        cur.nodes[parent].children[slot] = -1;
        cur.nodes.pop_back();
        std::vector<std::pair<int, int>> leaves;
        collect_leaves(cur, cur.root, leaves);
        int a = static_cast<int>(
            std::find(leaves.begin(), leaves.end(), std::make_pair(parent, slot)) - leaves.begin());
        rev.push_back(a);
    }
    return Cliff(rev.rbegin(), rev.rend());
}

}  // namespace cliffs
