#pragma once

// Structures attached to double-occurrence words: the digraph of
// cyclically consecutive letters, its Eulerian circuit counts, and the
// chord diagram / circle graph of the two occurrences of each letter.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shufsq/word.hpp"

namespace shufsq {

struct WordDigraph {
    std::vector<int> vertices;              // letters present, sorted
    std::vector<std::pair<int, int>> arcs;  // word order, cyclic closure last
};

/// Arcs (w_i, w_{i+1}) for all positions i, cyclically.
WordDigraph gauss_digraph(const Word& w);

/// Number of Eulerian circuits of the digraph of w, counted as sequences
/// of arc instances anchored at the arc leaving position 0 (equivalently,
/// circuits up to rotation with parallel arcs kept distinguishable).
/// Requires a canonical word.
std::uint64_t euler_number(const Word& w);

/// The same count through the arborescence formula: (number of spanning
/// in-trees rooted at the anchor vertex) x prod_v (outdeg(v) - 1)!,
/// with the in-tree count from an exact integer determinant.
std::uint64_t euler_number_best(const Word& w);

/// Eulerian circuits counted as cyclic sequences of arc LABELS (parallel
/// arcs identified). Reported alongside euler_number since the two
/// conventions differ on words with repeated arcs.
std::uint64_t euler_label_classes(const Word& w);

struct ChordDiagram {
    int k = 0;
    std::vector<std::pair<int, int>> chords; // position pair per letter
    std::vector<std::pair<int, int>> edges;  // crossing letter pairs, sorted
};

/// Chords join the two occurrences of each letter around the circle;
/// chords are adjacent iff their endpoints interleave cyclically.
/// Requires a canonical word.
ChordDiagram circle_graph(const Word& w);

struct EulerScanRow {
    Word word;
    std::uint64_t euler = 0;
    std::uint64_t label_classes = 0;
    bool shuffle_square = false;
};

struct EulerScan {
    std::vector<EulerScanRow> rows;
    /// Words where (euler == 1) and shuffle-square status disagree.
    std::vector<Word> violations;
};

/// Full table over the canonical words of alphabet size k.
EulerScan euler_shuffle_scan(int k);

std::string digraph_to_text(const WordDigraph& graph);
std::string chord_diagram_to_text(const ChordDiagram& diagram);

} // namespace shufsq
