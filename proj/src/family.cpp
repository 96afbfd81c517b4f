#include "xlab/family.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "xlab/invariants.hpp"

namespace xlab {

GraphFamily GraphFamily::from_members(std::string name, std::vector<Graph> members) {
    if (members.empty())
        throw std::invalid_argument("family must be nonempty");
    std::vector<Graph> canon;
    std::unordered_set<Graph, GraphHash> seen;
    for (const Graph& g : members) {
        Graph c = canonical_form(g);
        if (seen.insert(c).second) canon.push_back(std::move(c));
    }
    std::sort(canon.begin(), canon.end());
    GraphFamily fam;
    fam.name_ = std::move(name);
    fam.members_ = std::move(canon);
    fam.chi_ = 1 << 30;
    for (const Graph& g : fam.members_) {
        fam.chi_ = std::min(fam.chi_, chromatic_number(g));
        fam.phi_ = std::max(fam.phi_, g.order());
        fam.max_edges_ = std::max(fam.max_edges_, g.size());
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Materialization of G(F_1,...,F_k): glue copies one at a time, each new
// copy's edges disjoint from everything placed so far.

namespace {

// All edge sets realizable by embedding `pattern` into the complete graph on
// host_n vertices while avoiding the edges of `base`.
void all_avoiding_images(const Graph& base, int host_n, const Graph& pattern,
                         std::set<EdgeList>& images) {
    std::vector<int> map(static_cast<std::size_t>(pattern.order()), -1);
    std::vector<bool> used(static_cast<std::size_t>(host_n), false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == pattern.order()) {
            EdgeList img;
            for (auto [u, v] : pattern.edges()) {
                int a = map[static_cast<std::size_t>(u)];
                int b = map[static_cast<std::size_t>(v)];
                if (a > b) std::swap(a, b);
                img.emplace_back(a, b);
            }
            std::sort(img.begin(), img.end());
            images.insert(std::move(img));
            return;
        }
        for (int h = 0; h < host_n; ++h) {
            if (used[static_cast<std::size_t>(h)]) continue;
            bool ok = true;
            for (int q = 0; q < depth && ok; ++q) {
                if (!pattern.has_edge(q, depth)) continue;
                int hq = map[static_cast<std::size_t>(q)];
                if (hq < base.order() && h < base.order() && base.has_edge(hq, h))
                    ok = false;  // would reuse an existing edge
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(h)] = true;
            map[static_cast<std::size_t>(depth)] = h;
            self(self, depth + 1);
            used[static_cast<std::size_t>(h)] = false;
        }
    };
    rec(rec, 0);
}

}  // namespace

std::vector<Graph> edge_disjoint_union_family(const std::vector<Graph>& patterns) {
    if (patterns.empty())
        throw std::invalid_argument("edge_disjoint_union_family: no patterns");
    std::vector<Graph> current{Graph::empty(0)};
    for (const Graph& p : patterns) {
        std::unordered_set<Graph, GraphHash> next;
        for (const Graph& base : current) {
            int host_n = base.order() + p.order();
            if (host_n > Graph::max_vertices)
                throw std::invalid_argument("edge_disjoint_union_family: too large");
            std::set<EdgeList> images;
            all_avoiding_images(base, host_n, p, images);
            for (const EdgeList& img : images) {
                Graph g = Graph::empty(host_n);
                for (auto [u, v] : base.edges()) g = g.with_edge(u, v);
                for (auto [u, v] : img) g = g.with_edge(u, v);
                next.insert(canonical_form(g.without_isolated()));
            }
        }
        current.assign(next.begin(), next.end());
        std::sort(current.begin(), current.end());
    }
    return current;
}

// ---------------------------------------------------------------------------
// Mini-language parser.

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("family spec: " + what + " at position " +
                                    std::to_string(pos));
    }

    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos) fail("expected number");
        return std::stoi(s.substr(start, pos - start));
    }

    std::vector<Graph> family() {
        std::vector<Graph> out = expr();
        while (eat(',')) {
            auto more = expr();
            out.insert(out.end(), more.begin(), more.end());
        }
        return out;
    }

    std::vector<Graph> expr() {
        std::vector<Graph> left = term();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '+') {
                ++pos;
                left = {combine(left, term(), /*join_op=*/true)};
            } else if (pos < s.size() && s[pos] == 'u') {
                ++pos;
                left = {combine(left, term(), /*join_op=*/false)};
            } else {
                return left;
            }
        }
    }

    Graph combine(const std::vector<Graph>& a, const std::vector<Graph>& b,
                  bool join_op) {
        if (a.size() != 1 || b.size() != 1)
            fail("join/union operands must be single graphs");
        return join_op ? join(a[0], b[0]) : disjoint_union(a[0], b[0]);
    }

    std::vector<Graph> term() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            auto inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (s.compare(pos, 3, "g6:") == 0) {
            pos += 3;
            std::size_t start = pos;
            while (pos < s.size()) {
                unsigned char c = static_cast<unsigned char>(s[pos]);
                if (c < 63 || c > 126) break;
                ++pos;
            }
            return {parse_graph6(s.substr(start, pos - start))};
        }
        if (s[pos] == 'G' && pos + 1 < s.size() && s[pos + 1] == '(') {
            pos += 2;
            std::vector<Graph> patterns;
            patterns.push_back(single(expr()));
            while (eat(',')) patterns.push_back(single(expr()));
            if (!eat(')')) fail("expected ')'");
            return edge_disjoint_union_family(patterns);
        }
        if (s[pos] == 'T' && pos + 1 < s.size() && s[pos + 1] == '(') {
            pos += 2;
            int n = number();
            if (!eat(',')) fail("expected ',' in T(n,r)");
            int r = number();
            if (!eat(')')) fail("expected ')'");
            return {turan(n, r)};
        }
        char kind = s[pos];
        ++pos;
        int n = number();
        switch (kind) {
            case 'K': return {standard_graph(StandardKind::complete, n)};
            case 'C': return {standard_graph(StandardKind::cycle, n)};
            case 'P': return {standard_graph(StandardKind::path, n)};
            case 'S': return {standard_graph(StandardKind::star, n)};
            case 'M': return {standard_graph(StandardKind::matching, n)};
            case 'E': return {standard_graph(StandardKind::empty, n)};
            case 'W': return {standard_graph(StandardKind::wheel, n)};
            default: fail("unknown graph name");
        }
    }

    Graph single(const std::vector<Graph>& v) {
        if (v.size() != 1) fail("expected a single graph");
        return v[0];
    }
};

}  // namespace

GraphFamily parse_family(const std::string& spec) {
    Parser p(spec);
    std::vector<Graph> members = p.family();
    p.skip_ws();
    if (p.pos != spec.size()) p.fail("trailing input");
    return GraphFamily::from_members(spec, std::move(members));
}

Graph parse_graph_expr(const std::string& spec) {
    Parser p(spec);
    std::vector<Graph> members = p.expr();
    p.skip_ws();
    if (p.pos != spec.size()) p.fail("trailing input");
    if (members.size() != 1)
        throw std::invalid_argument("expected a single graph expression");
    return members[0];
}

}  // namespace xlab
