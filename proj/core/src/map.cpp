#include "unicell/map.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

namespace unicell {

const char* errc_message(Errc code) {
    switch (code) {
        case Errc::NotInvolution: return "alpha is not a fixed-point-free involution";
        case Errc::NotBijection: return "image array is not a bijection on the half-edges";
        case Errc::MultiFace: return "alpha∘sigma has more than one cycle";
        case Errc::ParseError: return "malformed map line";
        case Errc::RootLabelNonzero: return "root vertex label is not 0";
        case Errc::LabelJump: return "adjacent vertex labels differ by more than 1";
        case Errc::NotATrisection: return "half-edge is not a trisection";
        case Errc::FrameMissing: return "no b2 candidate for trisection frame";
        case Errc::SameVertex: return "gluing triple must lie in three distinct vertices";
        case Errc::BadOrder: return "gluing triple must be strictly increasing in tour rank";
        case Errc::NotSameVertex: return "slicing triple must lie in a single vertex";
        case Errc::NotIntertwined: return "slicing triple is not intertwined";
        case Errc::WrongType: return "trisection has the wrong type for this inverse";
        case Errc::OrderViolated: return "minima must be strictly increasing in tour rank";
        case Errc::EvenMarks: return "number of marked vertices must be odd";
        case Errc::LabelMismatch: return "marked vertices must share one label";
        case Errc::SizeBound: return "edge count exceeds the brute-force size bound";
        case Errc::GenusTooLarge: return "genus too large for edge count";
    }
    return "unknown error";
}

bool Permutation::is_bijection() const {
    std::vector<char> seen(images.size(), 0);
    for (int v : images) {
        if (v < 0 || v >= (int)images.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

bool Permutation::is_fixed_point_free_involution() const {
    for (int h = 0; h < (int)images.size(); h++) {
        int a = images[h];
        if (a < 0 || a >= (int)images.size()) return false;
        if (a == h || images[a] != h) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images.size());
    for (int h = 0; h < (int)images.size(); h++) inv[images[h]] = h;
    return Permutation(std::move(inv));
}

UnicellularMap build_map(int n, Permutation alpha, Permutation sigma, int root) {
    if (n < 1) throw MapError(Errc::ParseError, "edge count must be positive");
    const int H = 2 * n;
    if (alpha.size() != H || sigma.size() != H)
        throw MapError(Errc::NotBijection, "image arrays must have length 2n");
    if (root < 0 || root >= H) throw MapError(Errc::ParseError, "root out of range");
    if (!sigma.is_bijection() || !alpha.is_bijection())
        throw MapError(Errc::NotBijection);
    if (!alpha.is_fixed_point_free_involution())
        throw MapError(Errc::NotInvolution);

    // gamma = alpha∘sigma must be one 2n-cycle: walk it from the root.
    int h = root, steps = 0;
    do {
        h = alpha(sigma(h));
        steps++;
    } while (h != root && steps <= H);
    if (steps != H) throw MapError(Errc::MultiFace);

    UnicellularMap m;
    m.n = n;
    m.alpha = std::move(alpha);
    m.sigma = std::move(sigma);
    m.root = root;

    assert((n + 1 - vertex_count(m)) % 2 == 0 && genus(m) >= 0);
    return m;
}

Permutation face(const UnicellularMap& m) {
    std::vector<int> img(m.half_edges());
    for (int h = 0; h < m.half_edges(); h++) img[h] = m.alpha(m.sigma(h));
    return Permutation(std::move(img));
}

int vertex_count(const UnicellularMap& m) {
    std::vector<char> seen(m.half_edges(), 0);
    int cycles = 0;
    for (int h = 0; h < m.half_edges(); h++) {
        if (seen[h]) continue;
        cycles++;
        for (int k = h; !seen[k]; k = m.sigma(k)) seen[k] = 1;
    }
    return cycles;
}

int genus(const UnicellularMap& m) { return (m.n + 1 - vertex_count(m)) / 2; }

TourRank tour_rank(const UnicellularMap& m) {
    TourRank r;
    r.rank.assign(m.half_edges(), -1);
    int h = m.root;
    for (int i = 0; i < m.half_edges(); i++) {
        r.rank[h] = i;
        h = m.alpha(m.sigma(h));
    }
    return r;
}

std::vector<int> vertex_of(const UnicellularMap& m, int h) {
    std::vector<int> cycle;
    int k = h;
    do {
        cycle.push_back(k);
        k = m.sigma(k);
    } while (k != h);
    return cycle;
}

int min_halfedge(const UnicellularMap& m, const TourRank& rank, int h) {
    int best = h;
    for (int k = m.sigma(h); k != h; k = m.sigma(k))
        if (rank[k] < rank[best]) best = k;
    return best;
}

int min_halfedge(const UnicellularMap& m, int h) {
    return min_halfedge(m, tour_rank(m), h);
}

std::vector<int> vertex_minima(const UnicellularMap& m, const TourRank& rank) {
    std::vector<char> seen(m.half_edges(), 0);
    std::vector<int> minima;
    for (int h = 0; h < m.half_edges(); h++) {
        if (seen[h]) continue;
        int best = h;
        for (int k = h; !seen[k]; k = m.sigma(k)) {
            seen[k] = 1;
            if (rank[k] < rank[best]) best = k;
        }
        minima.push_back(best);
    }
    std::sort(minima.begin(), minima.end(),
              [&](int a, int b) { return rank[a] < rank[b]; });
    return minima;
}

std::vector<int> vertex_minima(const UnicellularMap& m) {
    return vertex_minima(m, tour_rank(m));
}

UnicellularMap canonicalize(const UnicellularMap& m) {
    TourRank r = tour_rank(m);
    std::vector<int> a(m.half_edges()), s(m.half_edges());
    for (int h = 0; h < m.half_edges(); h++) {
        a[r[h]] = r[m.alpha(h)];
        s[r[h]] = r[m.sigma(h)];
    }
    return build_map(m.n, Permutation(std::move(a)), Permutation(std::move(s)), 0);
}

static void append_images(std::string& out, const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); i++) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
}

std::string serialize(const UnicellularMap& m) {
    std::string out = "U " + std::to_string(m.n) + " r" + std::to_string(m.root) + " a:";
    append_images(out, m.alpha.images);
    out += " s:";
    append_images(out, m.sigma.images);
    return out;
}

std::string serialize_canonical(const UnicellularMap& m) {
    UnicellularMap c = canonicalize(m);
    std::string out = "Uc " + std::to_string(c.n) + " p:";
    bool first = true;
    for (int h = 0; h < c.half_edges(); h++) {
        if (c.alpha(h) < h) continue;
        if (!first) out += ',';
        first = false;
        out += std::to_string(h) + "-" + std::to_string(c.alpha(h));
    }
    return out;
}

std::string serialize_labeled(const LabeledUnicellularMap& lm) {
    std::string out = serialize(lm.map) + " l:";
    for (size_t i = 0; i < lm.labels.size(); i++) {
        if (i) out += ',';
        out += std::to_string(lm.labels[i]);
    }
    return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& tok) {
    int value = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw MapError(Errc::ParseError, "bad integer '" + tok + "'");
    return value;
}

std::vector<int> parse_int_list(const std::string& tok) {
    std::vector<int> out;
    for (const std::string& p : split(tok, ',')) out.push_back(parse_int(p));
    return out;
}

struct ParsedLine {
    UnicellularMap map;
    bool has_labels = false;
    std::vector<int> labels;
};

ParsedLine parse_map_line(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    if (toks.empty()) throw MapError(Errc::ParseError, "empty map line");

    ParsedLine out;
    size_t i = 0;
    if (toks[0] == "U") {
        if (toks.size() < 4) throw MapError(Errc::ParseError);
        int n = parse_int(toks[1]);
        if (toks[2].size() < 2 || toks[2][0] != 'r')
            throw MapError(Errc::ParseError, "expected r<root>");
        int root = parse_int(toks[2].substr(1));
        if (toks[3].rfind("a:", 0) != 0) throw MapError(Errc::ParseError, "expected a:<images>");
        std::vector<int> a = parse_int_list(toks[3].substr(2));
        if (toks.size() < 5 || toks[4].rfind("s:", 0) != 0)
            throw MapError(Errc::ParseError, "expected s:<images>");
        std::vector<int> s = parse_int_list(toks[4].substr(2));
        if ((int)a.size() != 2 * n || (int)s.size() != 2 * n)
            throw MapError(Errc::ParseError, "image list length must be 2n");
        out.map = build_map(n, Permutation(std::move(a)), Permutation(std::move(s)), root);
        i = 5;
    } else if (toks[0] == "Uc") {
        if (toks.size() < 3) throw MapError(Errc::ParseError);
        int n = parse_int(toks[1]);
        if (n < 1) throw MapError(Errc::ParseError, "edge count must be positive");
        if (toks[2].rfind("p:", 0) != 0) throw MapError(Errc::ParseError, "expected p:<pairs>");
        std::vector<int> a(2 * n, -1);
        std::vector<std::string> pairs = split(toks[2].substr(2), ',');
        if ((int)pairs.size() != n) throw MapError(Errc::ParseError, "expected n pairs");
        for (const std::string& pr : pairs) {
            std::vector<std::string> xy = split(pr, '-');
            if (xy.size() != 2) throw MapError(Errc::ParseError, "bad pair '" + pr + "'");
            int x = parse_int(xy[0]), y = parse_int(xy[1]);
            if (x < 0 || y < 0 || x >= 2 * n || y >= 2 * n || x >= y || a[x] != -1 || a[y] != -1)
                throw MapError(Errc::ParseError, "bad pair '" + pr + "'");
            a[x] = y;
            a[y] = x;
        }
        // root 0 and face (0,1,...,2n-1) are implied: sigma = alpha∘gamma.
        std::vector<int> s(2 * n);
        for (int h = 0; h < 2 * n; h++) s[h] = a[(h + 1) % (2 * n)];
        out.map = build_map(n, Permutation(std::move(a)), Permutation(std::move(s)), 0);
        i = 3;
    } else {
        throw MapError(Errc::ParseError, "unknown map prefix '" + toks[0] + "'");
    }

    if (i < toks.size()) {
        if (toks[i].rfind("l:", 0) != 0 || i + 1 != toks.size())
            throw MapError(Errc::ParseError, "trailing tokens");
        out.has_labels = true;
        out.labels = parse_int_list(toks[i].substr(2));
    }
    return out;
}

} // namespace

UnicellularMap deserialize(const std::string& line) {
    ParsedLine p = parse_map_line(line);
    if (p.has_labels)
        throw MapError(Errc::ParseError, "line carries labels; use deserialize_labeled");
    return p.map;
}

LabeledUnicellularMap deserialize_labeled(const std::string& line) {
    ParsedLine p = parse_map_line(line);
    if (!p.has_labels) throw MapError(Errc::ParseError, "no l: section");
    if ((int)p.labels.size() != vertex_count(p.map))
        throw MapError(Errc::ParseError, "label count must equal vertex count");
    LabeledUnicellularMap lm{std::move(p.map), std::move(p.labels)};
    validate_labels(lm);
    return lm;
}

void validate_labels(const LabeledUnicellularMap& lm) {
    const UnicellularMap& m = lm.map;
    if ((int)lm.labels.size() != vertex_count(m))
        throw std::invalid_argument("label count must equal vertex count");
    TourRank rank = tour_rank(m);
    std::vector<int> minima = vertex_minima(m, rank);

    // vertex index (in increasing-min order) for each half-edge
    std::vector<int> vidx(m.half_edges(), -1);
    for (size_t i = 0; i < minima.size(); i++)
        for (int h : vertex_of(m, minima[i])) vidx[h] = (int)i;

    if (lm.labels[vidx[m.root]] != 0) throw MapError(Errc::RootLabelNonzero);
    for (int h = 0; h < m.half_edges(); h++) {
        int d = lm.labels[vidx[h]] - lm.labels[vidx[m.alpha(h)]];
        if (d < -1 || d > 1) throw MapError(Errc::LabelJump);
    }
}

} // namespace unicell
