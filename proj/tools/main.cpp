// Command-line front end: single-word queries, table reproduction, and the
// long-running scans with checkpoints. Data goes to stdout (or --out);
// progress and diagnostics go to stderr. `check` exits 0 when a witness
// exists, 1 when none does, 2 on input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "shufsq/codes.hpp"
#include "shufsq/covering.hpp"
#include "shufsq/cyclic.hpp"
#include "shufsq/enumeration.hpp"
#include "shufsq/shuffle.hpp"
#include "shufsq/symmetry.hpp"

using namespace shufsq;

namespace {

enum class Format { human, csv, records };

struct Options {
    Format format = Format::human;
    int workers = 0;
    std::string out_path;
    std::string checkpoint;
};

void emit(const Options& options, const std::string& text) {
    if (options.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(options.out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + options.out_path);
    out << text;
}

std::string witness_text(const Word& w, const SplitWitness& witness, Format format) {
    std::ostringstream out;
    if (format == Format::human) {
        out << "first  " << (witness.first_positions.empty()
                                 ? std::string("(empty)")
                                 : w.subword(witness.first_positions).to_string())
            << "\n";
        out << "second " << (witness.second_positions.empty()
                                 ? std::string("(empty)")
                                 : w.subword(witness.second_positions).to_string())
            << "\n";
    }
    out << witness_to_record(witness) << "\n";
    return out.str();
}

int cmd_check(const Options& options, const std::string& word_text,
              const std::string& gamma_text) {
    Word w = Word::parse(word_text);
    std::optional<SplitWitness> witness;
    if (gamma_text.empty()) {
        witness = is_shuffle_square(w);
    } else {
        witness = is_gamma_shuffle_square(w, Permutation::parse(gamma_text));
    }
    if (!witness) {
        emit(options, gamma_text.empty()
                          ? "not a shuffle square\n"
                          : "not a shuffle gamma-square for gamma=" + gamma_text + "\n");
        return 1;
    }
    emit(options, witness_text(w, *witness, options.format));
    return 0;
}

int cmd_decompose(const Options& options, const std::string& word_text) {
    Word w = Word::parse(word_text);
    SplitWitness witness = cyclic_decompose(w);
    emit(options, witness_text(w, witness, options.format));
    return 0;
}

int cmd_shift(const Options& options, const std::string& word_text) {
    Word w = Word::parse(word_text);
    ShiftResult result = shift_to_shuffle_square(w);
    std::ostringstream out;
    out << "shift=" << result.shift << " fallback=" << (result.used_fallback ? 1 : 0)
        << " shifted=" << w.rotated_left(result.shift).to_string() << "\n";
    emit(options, out.str());
    return 0;
}

int cmd_s_of(const Options& options, const std::string& word_text) {
    Word w = Word::parse(word_text);
    std::ostringstream out;
    if (options.format == Format::records)
        out << "word=" << w.to_string() << " s=" << s_of(w) << "\n";
    else
        out << s_of(w) << "\n";
    emit(options, out.str());
    return 0;
}

std::string table1_text(int max_length, const Options& options) {
    std::ostringstream out;
    if (options.format == Format::csv) out << "2n,s_min,classes\n";
    for (int length = 2; length <= max_length; length += 2) {
        ScanOptions scan;
        scan.workers = options.workers;
        AntiSquareReport report = anti_square_scan(length, scan);
        if (options.format == Format::csv)
            out << length << "," << report.s_min << "," << report.class_count()
                << "\n";
        else
            out << "length=" << length << " s_min=" << report.s_min
                << " classes=" << report.class_count() << "\n";
    }
    return out.str();
}

std::string euler_scan_text(int k, Format format) {
    EulerScan scan = euler_shuffle_scan(k);
    std::ostringstream out;
    if (format == Format::csv) out << "word,euler,label_classes,shuffle_square\n";
    for (const auto& row : scan.rows) {
        if (format == Format::csv)
            out << row.word.to_string() << "," << row.euler << ","
                << row.label_classes << "," << (row.shuffle_square ? 1 : 0) << "\n";
        else
            out << "word=" << row.word.to_string() << " euler=" << row.euler
                << " label_classes=" << row.label_classes
                << " shuffle_square=" << (row.shuffle_square ? 1 : 0) << "\n";
    }
    out << "violations=" << scan.violations.size();
    for (const auto& w : scan.violations) out << " " << w.to_string();
    out << "\n";
    return out.str();
}

std::string dihedral_scan_text(int max_length, int alphabet_size,
                               const Options& options) {
    auto violating = dihedral_scan(max_length, alphabet_size, options.workers);
    std::ostringstream out;
    out << "violations=" << violating.size() << "\n";
    for (const auto& w : violating) out << w.to_string() << "\n";
    return out.str();
}

int cmd_table(const Options& options, const std::string& name, int max_length,
              int k, int length) {
    if (name == "table5") {
        CountTable table = count_table(max_length, options.workers);
        if (options.format == Format::records) {
            std::ostringstream out;
            for (int two_n = 2; two_n <= max_length; two_n += 2)
                for (int two_k = 0; two_k <= two_n; two_k += 2)
                    out << "length=" << two_n << " ones=" << two_k
                        << " count=" << table.entry(two_n, two_k) << "\n";
            emit(options, out.str());
        } else {
            emit(options, count_table_to_csv(table));
        }
        return 0;
    }
    if (name == "table1") {
        emit(options, table1_text(max_length, options));
        return 0;
    }
    if (name == "table3" || name == "covering-k") {
        CoverInstance instance = build_cover_instance(k, options.workers);
        emit(options, cover_instance_to_matrix(instance));
        return 0;
    }
    if (name == "appendixA") {
        ScanOptions scan;
        scan.workers = options.workers;
        scan.checkpoint_path = options.checkpoint;
        emit(options, anti_square_report_to_text(anti_square_scan(length, scan)));
        return 0;
    }
    std::cerr << "unknown table '" << name << "'\n";
    return 2;
}

int cmd_scan(const Options& options, const std::string& kind, int length,
             int max_length, int k, std::uint64_t stop_after) {
    if (kind == "anti-square") {
        ScanOptions scan;
        scan.workers = options.workers;
        scan.checkpoint_path = options.checkpoint;
        scan.stop_after = stop_after;
        AntiSquareReport report = anti_square_scan(length, scan);
        emit(options, anti_square_report_to_text(report));
        return 0;
    }
    if (kind == "dihedral") {
        emit(options, dihedral_scan_text(max_length, k, options));
        return 0;
    }
    if (kind == "euler") {
        emit(options, euler_scan_text(k, options.format));
        return 0;
    }
    std::cerr << "unknown scan '" << kind << "'\n";
    return 2;
}

int cmd_cover(const Options& options, int k) {
    CoverInstance instance = build_cover_instance(k, options.workers);
    CoverSolution solution = min_cover(instance);
    std::ostringstream out;
    out << "m=" << solution.size << " optimal=" << (solution.optimal ? 1 : 0)
        << "\n";
    for (const auto& gamma : solution.chosen) out << gamma.to_string() << "\n";
    emit(options, out.str());
    return 0;
}

int cmd_codes(const Options& options, const std::string& word_text) {
    Word w = Word::parse(word_text);
    std::ostringstream out;
    out << digraph_to_text(gauss_digraph(w));
    if (is_canonical_word(w)) {
        out << chord_diagram_to_text(circle_graph(w));
        out << "euler=" << euler_number(w)
            << " label_classes=" << euler_label_classes(w) << "\n";
    }
    emit(options, out.str());
    return 0;
}

CLI::App* with_fallthrough(CLI::App* sub) {
    sub->fallthrough(); // global flags may follow the subcommand
    return sub;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"shuffle squares toolkit"};
    app.require_subcommand(1);

    Options options;
    std::map<std::string, Format> format_names{
        {"human", Format::human}, {"csv", Format::csv}, {"records", Format::records}};
    app.add_option("--format", options.format, "output format")
        ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    app.add_option("--workers", options.workers, "worker thread count");
    app.add_option("--out", options.out_path, "write data to a file");
    app.add_option("--checkpoint", options.checkpoint, "checkpoint file for scans");

    std::string word_text, gamma_text, table_name, scan_kind;
    int max_length = 16, k = 3, length = 12;
    std::uint64_t stop_after = 0;

    auto* check = with_fallthrough(app.add_subcommand("check", "decide shuffle (gamma-)squareness"));
    check->add_option("word", word_text)->required();
    check->add_option("--gamma", gamma_text, "one-line permutation");

    auto* decompose = with_fallthrough(
        app.add_subcommand("decompose", "split into rotation-similar subwords"));
    decompose->add_option("word", word_text)->required();

    auto* shift = with_fallthrough(app.add_subcommand(
        "shift", "rotation making a word with at most four 1's a shuffle square"));
    shift->add_option("word", word_text)->required();

    auto* s_of_cmd = with_fallthrough(
        app.add_subcommand("s-of", "number of shifts that are shuffle squares"));
    s_of_cmd->add_option("word", word_text)->required();

    auto* table = with_fallthrough(app.add_subcommand("table", "reproduce a table"));
    table->add_option("name", table_name,
                      "table1 | table3 | table5 | appendixA | covering-k")
        ->required();
    table->add_option("--max-length", max_length);
    table->add_option("--k", k);
    table->add_option("--length", length);

    auto* scan = with_fallthrough(app.add_subcommand("scan", "run a long scan"));
    scan->add_option("kind", scan_kind, "anti-square | dihedral | euler")->required();
    scan->add_option("--length", length);
    scan->add_option("--max-length", max_length);
    scan->add_option("--k", k);
    scan->add_option("--stop-after", stop_after,
                     "stop after this many representatives (testing)")
        ->group(""); // hidden

    auto* cover = with_fallthrough(app.add_subcommand("cover", "minimum covering set"));
    cover->add_option("--k", k)->required();

    auto* codes = with_fallthrough(app.add_subcommand("codes", "digraph and chord diagram of a word"));
    codes->add_option("word", word_text)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(check)) return cmd_check(options, word_text, gamma_text);
        if (app.got_subcommand(decompose)) return cmd_decompose(options, word_text);
        if (app.got_subcommand(shift)) return cmd_shift(options, word_text);
        if (app.got_subcommand(s_of_cmd)) return cmd_s_of(options, word_text);
        if (app.got_subcommand(table))
            return cmd_table(options, table_name, max_length, k, length);
        if (app.got_subcommand(scan))
            return cmd_scan(options, scan_kind, length, max_length, k, stop_after);
        if (app.got_subcommand(cover)) return cmd_cover(options, k);
        if (app.got_subcommand(codes)) return cmd_codes(options, word_text);
    } catch (const CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << " (restart required)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
