#include "shufsq/codes.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "shufsq/shuffle.hpp"
#include "shufsq/symmetry.hpp"

namespace shufsq {

namespace {

void require_canonical(const Word& w, const char* who) {
    if (!is_canonical_word(w))
        throw std::invalid_argument(std::string(who) + ": canonical word required");
}

struct CircuitCounter {
    std::vector<std::pair<int, int>> arcs;
    std::vector<char> used;
    std::vector<std::vector<int>> arcs_from; // arc indices by tail vertex
    std::vector<int> sequence;               // arc indices, for label dedup
    std::uint64_t anchored = 0;
    std::set<std::vector<std::pair<int, int>>>* label_classes = nullptr;

    void run(int vertex, int remaining, int home) {
        if (remaining == 0) {
            if (vertex == home) {
                ++anchored;
                if (label_classes) {
                    // canonical rotation of the label sequence
                    std::vector<std::pair<int, int>> labels;
                    labels.reserve(sequence.size());
                    for (int a : sequence) labels.push_back(arcs[a]);
                    std::vector<std::pair<int, int>> best = labels;
                    for (std::size_t r = 1; r < labels.size(); ++r) {
                        std::rotate(labels.begin(), labels.begin() + 1, labels.end());
                        best = std::min(best, labels);
                    }
                    label_classes->insert(best);
                }
            }
            return;
        }
        for (int a : arcs_from[vertex]) {
            if (used[a]) continue;
            used[a] = 1;
            sequence.push_back(a);
            run(arcs[a].second, remaining - 1, home);
            sequence.pop_back();
            used[a] = 0;
        }
    }
};

CircuitCounter make_counter(const Word& w) {
    WordDigraph graph = gauss_digraph(w);
    CircuitCounter counter;
    counter.arcs = graph.arcs;
    counter.used.assign(graph.arcs.size(), 0);
    int max_vertex = 0;
    for (auto [a, b] : graph.arcs) max_vertex = std::max({max_vertex, a, b});
    counter.arcs_from.assign(max_vertex + 1, {});
    for (std::size_t i = 0; i < graph.arcs.size(); ++i)
        counter.arcs_from[graph.arcs[i].first].push_back(static_cast<int>(i));
    return counter;
}

// Bareiss fraction-free determinant; exact for the small integer matrices
// arising here.
std::int64_t integer_determinant(std::vector<std::vector<std::int64_t>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    std::int64_t prev = 1;
    int sign = 1;
    for (int col = 0; col < n - 1; ++col) {
        if (m[col][col] == 0) {
            int pivot = -1;
            for (int r = col + 1; r < n; ++r)
                if (m[r][col] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(m[col], m[pivot]);
            sign = -sign;
        }
        for (int r = col + 1; r < n; ++r)
            for (int c = col + 1; c < n; ++c)
                m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / prev;
        prev = m[col][col];
    }
    return sign * m[n - 1][n - 1];
}

} // namespace

WordDigraph gauss_digraph(const Word& w) {
    WordDigraph graph;
    int len = w.length();
    std::set<int> vertices;
    for (int i = 0; i < len; ++i) {
        vertices.insert(w.letter(i));
        graph.arcs.emplace_back(w.letter(i), w.letter((i + 1) % len));
    }
    graph.vertices.assign(vertices.begin(), vertices.end());
    return graph;
}

std::uint64_t euler_number(const Word& w) {
    require_canonical(w, "euler_number");
    CircuitCounter counter = make_counter(w);
    int anchor = 0; // the arc leaving position 0
    counter.used[anchor] = 1;
    counter.run(counter.arcs[anchor].second,
                static_cast<int>(counter.arcs.size()) - 1,
                counter.arcs[anchor].first);
    return counter.anchored;
}

std::uint64_t euler_number_best(const Word& w) {
    require_canonical(w, "euler_number");
    WordDigraph graph = gauss_digraph(w);
    int k = static_cast<int>(graph.vertices.size());
    std::vector<int> index(w.alphabet_size(), -1);
    for (int i = 0; i < k; ++i) index[graph.vertices[i]] = i;

    // out-degree Laplacian with loops cancelling
    std::vector<std::vector<std::int64_t>> laplacian(
        k, std::vector<std::int64_t>(k, 0));
    std::vector<std::uint64_t> outdeg(k, 0);
    for (auto [a, b] : graph.arcs) {
        int ia = index[a], ib = index[b];
        ++outdeg[ia];
        if (ia != ib) {
            ++laplacian[ia][ia];
            --laplacian[ia][ib];
        }
    }

    int root = index[w.letter(0)]; // tail of the anchor arc
    std::vector<std::vector<std::int64_t>> minor;
    for (int r = 0; r < k; ++r) {
        if (r == root) continue;
        std::vector<std::int64_t> row;
        for (int c = 0; c < k; ++c)
            if (c != root) row.push_back(laplacian[r][c]);
        minor.push_back(std::move(row));
    }
    std::int64_t trees = integer_determinant(std::move(minor));
    if (trees < 0) throw std::logic_error("negative in-tree count");

    std::uint64_t result = static_cast<std::uint64_t>(trees);
    for (int v = 0; v < k; ++v) {
        std::uint64_t factorial = 1;
        for (std::uint64_t f = 2; f <= outdeg[v] - 1; ++f) factorial *= f;
        result *= factorial;
    }
    return result;
}

std::uint64_t euler_label_classes(const Word& w) {
    require_canonical(w, "euler_label_classes");
    CircuitCounter counter = make_counter(w);
    std::set<std::vector<std::pair<int, int>>> classes;
    counter.label_classes = &classes;
    int anchor = 0;
    counter.used[anchor] = 1;
    counter.sequence.push_back(anchor);
    counter.run(counter.arcs[anchor].second,
                static_cast<int>(counter.arcs.size()) - 1,
                counter.arcs[anchor].first);
    return classes.size();
}

ChordDiagram circle_graph(const Word& w) {
    require_canonical(w, "circle_graph");
    ChordDiagram diagram;
    diagram.k = w.alphabet_size();
    diagram.chords.assign(diagram.k, {-1, -1});
    for (int i = 0; i < w.length(); ++i) {
        auto& chord = diagram.chords[w.letter(i)];
        (chord.first < 0 ? chord.first : chord.second) = i;
    }
    for (int a = 0; a < diagram.k; ++a)
        for (int b = a + 1; b < diagram.k; ++b) {
            auto [a1, a2] = diagram.chords[a];
            auto [b1, b2] = diagram.chords[b];
            bool crossing = (a1 < b1 && b1 < a2 && a2 < b2) ||
                            (b1 < a1 && a1 < b2 && b2 < a2);
            if (crossing) diagram.edges.emplace_back(a, b);
        }
    return diagram;
}

EulerScan euler_shuffle_scan(int k) {
    if (k < 1 || k > 5)
        throw std::invalid_argument("euler_shuffle_scan: 1 <= k <= 5 required");
    EulerScan scan;
    for (const Word& w : enumerate_canonical_words(k)) {
        EulerScanRow row;
        row.word = w;
        row.euler = euler_number(w);
        row.label_classes = euler_label_classes(w);
        row.shuffle_square = is_shuffle_square(w).has_value();
        if ((row.euler == 1) != row.shuffle_square) scan.violations.push_back(w);
        scan.rows.push_back(std::move(row));
    }
    return scan;
}

namespace {

std::string letter_name(int letter) { return std::string(1, 'A' + letter); }

} // namespace

std::string digraph_to_text(const WordDigraph& graph) {
    std::string out = "vertices";
    for (int v : graph.vertices) out += " " + letter_name(v);
    out.push_back('\n');
    for (auto [a, b] : graph.arcs)
        out += letter_name(a) + " " + letter_name(b) + "\n";
    return out;
}

std::string chord_diagram_to_text(const ChordDiagram& diagram) {
    std::string out;
    for (int c = 0; c < diagram.k; ++c)
        out += "chord " + letter_name(c) + " " +
               std::to_string(diagram.chords[c].first) + " " +
               std::to_string(diagram.chords[c].second) + "\n";
    for (auto [a, b] : diagram.edges)
        out += "edge " + letter_name(a) + " " + letter_name(b) + "\n";
    return out;
}

} // namespace shufsq
