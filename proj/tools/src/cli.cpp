#include "banbury/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "banbury/bayes.hpp"
#include "banbury/corpus.hpp"
#include "banbury/generators.hpp"
#include "banbury/markov.hpp"
#include "banbury/reference_data.hpp"
#include "banbury/repeats.hpp"
#include "banbury/stats_io.hpp"
#include "banbury/subtractor.hpp"
#include "banbury/transposition.hpp"
#include "banbury/vigenere.hpp"

namespace banbury::cli {
namespace {

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

std::string join(const std::vector<int>& v, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

// Reads a file, or takes `inline_text` when the file name is empty.
Letters letters_from(const std::string& path, const std::string& inline_text, const char* what) {
    if (!path.empty() && !inline_text.empty()) throw DomainError(std::string("give either a file or text for ") + what);
    if (path.empty() && inline_text.empty()) throw DomainError(std::string("no ") + what + " given");
    Letters l = normalize(path.empty() ? inline_text : io::read_text_file(path));
    if (l.empty()) throw EmptyCorpusError();
    return l;
}

io::StatsBundle load_stats(const std::string& path) {
    if (path.empty()) {
        io::StatsBundle b;
        b.letter_counts = reference::english_1000_counts();
        b.source = "english1000";
        b.size = 1000;
        return b;
    }
    return io::read_stats_file(path);
}

transposition::ExclusiveBigramTable load_table(const std::string& bigrams, const std::string& table, int fill) {
    if (bigrams.empty() == table.empty()) throw DomainError("give exactly one of --bigrams or --table");
    if (!table.empty()) return io::score_table_from_tsv(io::read_text_file(table), fill);
    return transposition::ExclusiveBigramTable::from_stats(io::read_stats_file(bigrams).bigrams());
}

BigramStats load_bigrams(const std::string& path) { return io::read_stats_file(path).bigrams(); }

// "0.5", "1/2" or "1:2" (1 on to 2 against, i.e. 0.5).
Odds parse_odds(const std::string& text) {
    auto sep = text.find_first_of("/:");
    try {
        std::size_t used = 0;
        if (sep == std::string::npos) {
            double r = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Odds(r);
        }
        double a = std::stod(text.substr(0, sep), &used);
        if (used != sep) throw std::invalid_argument(text);
        double b = std::stod(text.substr(sep + 1), &used);
        if (used != text.size() - sep - 1 || b <= 0.0) throw std::invalid_argument(text);
        return Odds(a / b);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad odds '" + text + "': expected a ratio such as 0.5, 1/2 or 1:2");
    } catch (const std::out_of_range&) {
        throw DomainError("odds out of range: " + text);
    }
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("bad integer list '" + text + "'");
        }
    }
    if (out.empty()) throw DomainError("empty integer list");
    return out;
}

// "15", "10..20" or "12,14,15".
std::vector<long long> parse_key_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        auto v = parse_int_list(text);
        return {v.begin(), v.end()};
    }
    auto lo = parse_int_list(text.substr(0, dots));
    auto hi = parse_int_list(text.substr(dots + 2));
    if (lo.size() != 1 || hi.size() != 1 || hi[0] < lo[0]) throw DomainError("bad key range '" + text + "'");
    std::vector<long long> out;
    for (long long k = lo[0]; k <= hi[0]; ++k) out.push_back(k);
    return out;
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// ---- stats ----------------------------------------------------------------

struct StatsOpts {
    std::string corpus;
    bool circular = false;
    std::string format = "json";
    int max_r = 0;
    std::string source;
};

int cmd_stats(const StatsOpts& o, std::ostream& out) {
    Letters text = normalize(io::read_text_file(o.corpus));
    if (text.empty()) throw EmptyCorpusError();
    std::string source = o.source.empty() ? std::filesystem::path(o.corpus).filename().string() : o.source;
    auto bundle = io::bundle_from_corpus(text, source, o.circular, o.max_r);
    out << (o.format == "tsv" ? io::to_tsv(bundle) : io::to_json(bundle) + "\n");
    return kExitOk;
}

// ---- vigenere -------------------------------------------------------------

struct VigOpts {
    std::string stats;
    std::string cipher;
    std::string text;
    std::string key;
    int period = 0;
    int max_mult = 9;
    int top = 3;
    std::string formula = "26p";
};

vigenere::ScoreFormula formula_of(const std::string& f) {
    return f == "odds" ? vigenere::ScoreFormula::OddsAgainstRest : vigenere::ScoreFormula::TwentySixP;
}

int cmd_vig_table(const VigOpts& o, std::ostream& out) {
    auto dist = load_stats(o.stats).letters();
    auto t = vigenere::ColumnScoreTable::build(dist, o.max_mult, formula_of(o.formula));
    out << "letter";
    for (int m = 1; m <= o.max_mult; ++m) out << '\t' << m;
    out << '\n';
    for (int a = 0; a < kAlphabetSize; ++a) {
        out << letter_at(a);
        for (int m = 1; m <= o.max_mult; ++m) out << '\t' << t.multiple(m, letter_at(a)).value;
        out << '\n';
    }
    return kExitOk;
}

int cmd_vig_score(const VigOpts& o, std::ostream& out) {
    auto dist = load_stats(o.stats).letters();
    auto t = vigenere::ColumnScoreTable::build(dist, o.max_mult, formula_of(o.formula));
    auto cols = vigenere::split_columns(letters_from(o.cipher, o.text, "cipher"), static_cast<std::size_t>(o.period));
    out << "key";
    for (std::size_t c = 0; c < cols.size(); ++c) out << '\t' << c + 1;
    out << '\n';
    for (int k = 0; k < kAlphabetSize; ++k) {
        out << letter_at(k);
        for (const auto& col : cols) out << '\t' << vigenere::score_column(col, letter_at(k), t).value;
        out << '\n';
    }
    return kExitOk;
}

int cmd_vig_solve(const VigOpts& o, std::ostream& out) {
    auto dist = load_stats(o.stats).letters();
    auto t = vigenere::ColumnScoreTable::build(dist, o.max_mult, formula_of(o.formula));
    auto cipher = letters_from(o.cipher, o.text, "cipher");
    auto cols = vigenere::split_columns(cipher, static_cast<std::size_t>(o.period));
    const int top = std::clamp(o.top, 1, kAlphabetSize);
    Letters best;
    out << "column\trank\tkey\tscore\tposterior\n";
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto ranked = vigenere::rank_keys(cols[c], t);
        auto post = vigenere::key_posterior(cols[c], dist);
        best += ranked[0].key;
        for (int r = 0; r < top; ++r) {
            const auto& ks = ranked[static_cast<std::size_t>(r)];
            out << c + 1 << '\t' << r + 1 << '\t' << ks.key << '\t' << ks.score.value << '\t'
                << fmt("%.6f", post[static_cast<std::size_t>(letter_index(ks.key))]) << '\n';
        }
    }
    out << "key\t" << best << '\n';
    out << "clear\t" << vigenere::decipher(cipher, vigenere::Key(best)) << '\n';
    return kExitOk;
}

int cmd_vig_crypt(const VigOpts& o, bool encrypt, std::ostream& out) {
    vigenere::Key key(normalize(o.key));
    auto in = letters_from(o.cipher, o.text, "input");
    out << (encrypt ? vigenere::encipher(in, key) : vigenere::decipher(in, key)) << '\n';
    return kExitOk;
}

// ---- subtractor -----------------------------------------------------------

struct SubOpts {
    int components = 3;
    int max_slide = 9;
    bool tabulated = false;
    std::string cipher;
    std::string crib;
    std::size_t offset = 0;
    std::string slides;
    std::string prior = "1";
    std::uint64_t seed = 1;
    int trials = 20;
    std::size_t length = 40;
    std::size_t crib_length = 10;
};

subtractor::SlideScoreTable slide_table(const SubOpts& o) {
    if (o.tabulated) return subtractor::SlideScoreTable::from_scores(reference::tabulated_slide_scores());
    return subtractor::SlideScoreTable::from_distribution(subtractor::slide_coefficients(o.components, o.max_slide));
}

int cmd_sub_table(const SubOpts& o, std::ostream& out) {
    if (o.tabulated) {
        auto t = slide_table(o);
        out << "slide\tscore\n";
        for (int s = 0; s < kAlphabetSize; ++s) out << s << '\t' << t.score(s).value << '\n';
        return kExitOk;
    }
    auto d = subtractor::slide_coefficients(o.components, o.max_slide);
    auto t = subtractor::SlideScoreTable::from_distribution(d);
    out << "slide\tways\tprobability\tscore\n";
    for (int s = 0; s < kAlphabetSize; ++s) {
        out << s << '\t' << d.remainders[static_cast<std::size_t>(s)].str() << '\t' << fmt("%.6f", d.probability(s))
            << '\t' << t.score(s).value << '\n';
    }
    return kExitOk;
}

int cmd_sub_crib(const SubOpts& o, std::ostream& out) {
    std::vector<int> slides;
    if (!o.slides.empty()) {
        if (!o.cipher.empty() || !o.crib.empty()) throw DomainError("give either --slides or --cipher with --crib");
        slides = parse_int_list(o.slides);
    } else {
        if (o.cipher.empty() || o.crib.empty()) throw DomainError("--cipher and --crib are both required");
        slides = subtractor::slides_from_crib(normalize(o.cipher), normalize(o.crib), o.offset).slides;
    }
    auto score = subtractor::score_crib(slides, slide_table(o), parse_odds(o.prior));
    out << "slides\t" << join(slides) << '\n';
    out << "score\t" << score.total.value << '\n';
    out << "decibans\t" << fmt("%.1f", score.total.decibans().value) << '\n';
    out << "factor\t" << fmt("%.6g", score.total.factor()) << '\n';
    out << "posterior_odds\t" << fmt("%.6g", score.posterior.ratio()) << '\n';
    return kExitOk;
}

int cmd_sub_simulate(const SubOpts& o, std::ostream& out) {
    static const std::size_t primes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    if (o.components < 1 || o.components > 10) throw DomainError("--components must be 1..10");
    if (o.crib_length < 1 || o.crib_length > o.length) throw DomainError("--crib-length must be 1..length");
    std::vector<std::size_t> periods(primes, primes + o.components);
    auto t = slide_table(o);
    auto prior = parse_odds(o.prior);
    gen::Rng rng(o.seed);
    long long right_sum = 0, wrong_sum = 0;
    int right_better = 0;
    out << "trial\tright\twrong\n";
    for (int i = 0; i < o.trials; ++i) {
        auto machine = gen::random_subtractor(periods, o.max_slide, rng);
        auto plain = gen::english_like_text(o.length, rng);
        auto cipher = machine.encipher(plain);
        std::uniform_int_distribution<std::size_t> at(0, o.length - o.crib_length);
        std::size_t off = at(rng);
        auto decoy = gen::english_like_text(o.crib_length, rng);
        int r = subtractor::score_crib(subtractor::slides_from_crib(cipher, plain.substr(off, o.crib_length), off), t, prior)
                    .total.value;
        int w = subtractor::score_crib(subtractor::slides_from_crib(cipher, decoy, off), t, prior).total.value;
        out << i + 1 << '\t' << r << '\t' << w << '\n';
        right_sum += r;
        wrong_sum += w;
        right_better += r > w;
    }
    if (o.trials > 0) {
        out << "mean_right\t" << fmt("%.3f", static_cast<double>(right_sum) / o.trials) << '\n';
        out << "mean_wrong\t" << fmt("%.3f", static_cast<double>(wrong_sum) / o.trials) << '\n';
        out << "right_better\t" << right_better << '\n';
    }
    return kExitOk;
}

// ---- repeats --------------------------------------------------------------

struct RepOpts {
    std::string m1;
    std::string m2;
    bool literal = false;
    int distance = 0;
    std::string corpus;
    int max_r = 6;
    std::string figure;
    std::string params;
    bool simple = false;
    double beta = 0.0;
    std::string stats;
    std::uint64_t seed = 1;
    int trials = 100;
    std::size_t overlap = 50;
    bool verbose = false;
};

int cmd_rep_figure(const RepOpts& o, std::ostream& out) {
    auto m1 = o.literal ? normalize(o.m1) : letters_from(o.m1, "", "first message");
    auto m2 = o.literal ? normalize(o.m2) : letters_from(o.m2, "", "second message");
    auto fig = repeats::repetition_figure(m1, m2, o.distance);
    std::vector<int> runs = fig.runs();
    out << fig.annotated() << '\n';
    out << "overlap\t" << fig.overlap() << '\n';
    out << "repeats\t" << fig.repeats() << '\n';
    out << "runs\t" << join(runs) << '\n';
    return kExitOk;
}

int cmd_rep_params(const RepOpts& o, std::ostream& out) {
    auto text = normalize(io::read_text_file(o.corpus));
    if (text.empty()) throw EmptyCorpusError();
    auto rc = RgramCounts::from_letters(text, o.max_r + 2);
    auto p = repeats::estimate_params(rc, LetterDistribution::from_letters(text), o.max_r);
    out << io::to_json(p) << '\n';
    return kExitOk;
}

int cmd_rep_score(const RepOpts& o, std::ostream& out) {
    auto fig = repeats::RepetitionFigure::parse(o.figure);
    Decibans db;
    if (o.simple) {
        double beta = o.beta;
        if (beta == 0.0) {
            beta = o.params.empty() ? load_stats(o.stats).letters().coincidence()
                                    : io::params_from_json(io::read_text_file(o.params)).beta;
        }
        db = repeats::simple_fit_factor(fig, beta);
    } else {
        if (o.params.empty()) throw DomainError("--params is required unless --simple is given");
        db = repeats::general_fit_score(fig, io::params_from_json(io::read_text_file(o.params)));
    }
    out << "figure\t" << fig.annotated() << '\n';
    out << "decibans\t" << fmt("%.4f", db.value) << '\n';
    out << "factor\t" << fmt("%.6g", db.factor()) << '\n';
    return kExitOk;
}

int cmd_rep_simulate(const RepOpts& o, std::ostream& out) {
    if (o.trials < 1 || o.overlap < 1) throw DomainError("--trials and --overlap must be positive");
    auto dist = load_stats(o.stats).letters();
    const double beta = o.beta == 0.0 ? dist.coincidence() : o.beta;
    gen::Rng rng(o.seed);
    auto score_pair = [&](bool in_depth) {
        auto p1 = gen::sample_letters(dist, o.overlap, rng);
        auto p2 = gen::sample_letters(dist, o.overlap, rng);
        auto k1 = gen::random_shift_stream(o.overlap, rng);
        auto k2 = in_depth ? k1 : gen::random_shift_stream(o.overlap, rng);
        auto fig = repeats::repetition_figure(gen::apply_shift_stream(p1, k1), gen::apply_shift_stream(p2, k2), 0);
        return repeats::simple_fit_factor(fig, beta).value;
    };
    std::vector<double> right, wrong;
    for (int i = 0; i < o.trials; ++i) right.push_back(score_pair(true));
    for (int i = 0; i < o.trials; ++i) wrong.push_back(score_pair(false));
    double wins = 0.0;
    for (double r : right)
        for (double w : wrong) wins += r > w ? 1.0 : (r == w ? 0.5 : 0.0);
    const double n = static_cast<double>(o.trials);
    if (o.verbose) {
        out << "kind\tdecibans\n";
        for (double r : right) out << "right\t" << fmt("%.4f", r) << '\n';
        for (double w : wrong) out << "wrong\t" << fmt("%.4f", w) << '\n';
    }
    out << "trials\t" << o.trials << '\n';
    out << "overlap\t" << o.overlap << '\n';
    out << "beta\t" << fmt("%.6f", beta) << '\n';
    out << "mean_right\t" << fmt("%.4f", std::accumulate(right.begin(), right.end(), 0.0) / n) << '\n';
    out << "mean_wrong\t" << fmt("%.4f", std::accumulate(wrong.begin(), wrong.end(), 0.0) / n) << '\n';
    out << "auc\t" << fmt("%.4f", wins / (n * n)) << '\n';
    return kExitOk;
}

// ---- transpose ------------------------------------------------------------

struct TrOpts {
    std::string probe;
    std::string message;
    std::string bigrams;
    std::string table;
    int fill = 0;
    std::string earlier;
    std::string later;
    long long length = 0;
    long long pos = 0;
    std::string keys;
    double tol = 1e-9;
    int max_n = 1000;
    std::string pattern;
    std::string key;
    std::string input;
    std::string text;
};

int cmd_tr_score(const TrOpts& o, std::ostream& out) {
    auto table = load_table(o.bigrams, o.table, o.fill);
    auto message = letters_from(o.message, "", "message");
    auto probe = normalize(o.probe);
    auto scan = transposition::scan_alignments(probe, message, table);
    auto p_earlier = transposition::alternative_probabilities(scan.as_earlier, scan.excluded);
    auto p_later = transposition::alternative_probabilities(scan.as_later, scan.excluded);
    out << "offset\twindow\tas_earlier\tas_later\tp_earlier\tp_later\n";
    for (std::size_t i = 0; i < scan.as_earlier.size(); ++i) {
        out << i << '\t' << message.substr(i, probe.size()) << '\t';
        if (scan.excluded[i]) {
            out << "self\tself\t-\t-\n";
            continue;
        }
        out << scan.as_earlier[i] << '\t' << scan.as_later[i] << '\t' << fmt("%.6f", p_earlier[i]) << '\t'
            << fmt("%.6f", p_later[i]) << '\n';
    }
    return kExitOk;
}

int cmd_tr_pair(const TrOpts& o, std::ostream& out) {
    auto table = load_table(o.bigrams, o.table, o.fill);
    auto a = normalize(o.earlier);
    auto b = normalize(o.later);
    auto total = transposition::score_column_pair(a, b, table);
    for (std::size_t i = 0; i < a.size(); ++i) out << a[i] << b[i] << '\t' << table.score(a[i], b[i]) << '\n';
    out << "total\t" << total.value << '\n';
    return kExitOk;
}

int cmd_tr_table(const TrOpts& o, std::ostream& out) {
    out << io::to_tsv(transposition::ExclusiveBigramTable::from_stats(load_bigrams(o.bigrams)));
    return kExitOk;
}

int cmd_tr_bottom(const TrOpts& o, std::ostream& out) {
    for (long long k : parse_key_range(o.keys)) {
        auto p = transposition::bottom_of_column_probability(o.length, k, o.pos);
        out << k << '\t' << rational_str(p) << '\t' << fmt("%.6f", static_cast<double>(p)) << '\n';
    }
    return kExitOk;
}

int cmd_tr_markov(const TrOpts& o, std::ostream& out) {
    auto q = markov::TransitionMatrix::from_bigrams(load_bigrams(o.bigrams));
    auto rep = markov::stationarity_check(q, o.tol, o.max_n);
    out << "converged\t" << (rep.converged ? "true" : "false") << '\n';
    out << "steps\t" << rep.steps << '\n';
    out << "max_deviation\t" << fmt("%.3e", rep.max_deviation) << '\n';
    out << "yq_residual\t" << fmt("%.3e", rep.yq_residual) << '\n';
    out << "idempotence_residual\t" << fmt("%.3e", rep.idempotence_residual) << '\n';
    for (int b = 0; b < kAlphabetSize; ++b) out << letter_at(b) << '\t' << fmt("%.6f", rep.stationary[static_cast<std::size_t>(b)]) << '\n';
    return kExitOk;
}

int cmd_tr_pattern(const TrOpts& o, std::ostream& out) {
    auto stats = load_bigrams(o.bigrams);
    auto pat = transposition::parse_pattern(o.pattern);
    double approx = transposition::pattern_probability(pat, stats);
    double exact = transposition::exact_pattern_probability(pat, stats);
    out << "pattern\t" << o.pattern << '\n';
    out << "approximate\t" << fmt("%.6e", approx) << '\n';
    out << "exact\t" << fmt("%.6e", exact) << '\n';
    out << "relative_error\t" << fmt("%.4f", exact > 0.0 ? std::abs(approx - exact) / exact : 0.0) << '\n';
    return kExitOk;
}

int cmd_tr_crypt(const TrOpts& o, bool encrypt, std::ostream& out) {
    auto key = transposition::Key::parse(o.key);
    auto in = letters_from(o.input, o.text, "input");
    out << (encrypt ? transposition::encipher(in, key) : transposition::decipher(in, key)) << '\n';
    return kExitOk;
}

const CLI::App* deepest(const CLI::App* app) {
    for (const auto* sub : app->get_subcommands()) return deepest(sub);
    return app;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayesian scoring for classical cipher analysis", "banbury"};
    app.require_subcommand(1);
    std::function<int()> action;
    auto bind = [&](CLI::App* sub, std::function<int()> f) { sub->callback([&action, f] { action = f; }); };

    // stats
    StatsOpts so;
    auto* stats = app.add_subcommand("stats", "Count letters, bigrams and r-grams in a corpus");
    stats->add_option("--corpus", so.corpus, "Text file")->required();
    stats->add_flag("--circular", so.circular, "Wrap the last letter round to the first");
    stats->add_option("--format", so.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    stats->add_option("--max-r", so.max_r, "Also summarise repeats of r-grams up to this length")->check(CLI::Range(0, 64));
    stats->add_option("--source", so.source, "Source name recorded in the output");
    bind(stats, [&] { return cmd_stats(so, out); });

    // vigenere
    VigOpts vo;
    auto* vig = app.add_subcommand("vigenere", "Periodic shift cipher");
    vig->require_subcommand(1);
    auto add_stats = [&](CLI::App* s) {
        s->add_option("--stats", vo.stats, "Letter statistics (JSON or TSV); default built-in 1000-letter count");
        s->add_option("--max-mult", vo.max_mult, "Multiplicity rows")->check(CLI::Range(1, 1000));
        s->add_option("--formula", vo.formula, "26p or odds")->check(CLI::IsMember({"26p", "odds"}));
    };
    auto add_cipher = [&](CLI::App* s) {
        s->add_option("--cipher", vo.cipher, "Cipher text file");
        s->add_option("--text", vo.text, "Cipher text given inline");
    };
    auto* vtable = vig->add_subcommand("table", "Half-deciban score table");
    add_stats(vtable);
    bind(vtable, [&] { return cmd_vig_table(vo, out); });
    auto* vscore = vig->add_subcommand("score", "Score every key for every column");
    add_stats(vscore);
    add_cipher(vscore);
    vscore->add_option("--period", vo.period, "Key length")->required()->check(CLI::PositiveNumber);
    bind(vscore, [&] { return cmd_vig_score(vo, out); });
    auto* vsolve = vig->add_subcommand("solve", "Best keys per column with posteriors");
    add_stats(vsolve);
    add_cipher(vsolve);
    vsolve->add_option("--period", vo.period, "Key length")->required()->check(CLI::PositiveNumber);
    vsolve->add_option("--top", vo.top, "Keys listed per column");
    bind(vsolve, [&] { return cmd_vig_solve(vo, out); });
    for (bool enc : {true, false}) {
        auto* s = vig->add_subcommand(enc ? "encipher" : "decipher", enc ? "Encipher text" : "Decipher text");
        s->add_option("--key", vo.key, "Key letters")->required();
        s->add_option("--input", vo.cipher, "Input file");
        s->add_option("--text", vo.text, "Input given inline");
        bind(s, [&, enc] { return cmd_vig_crypt(vo, enc, out); });
    }

    // subtractor
    SubOpts sbo;
    auto* sub = app.add_subcommand("subtractor", "Letter subtractor slides and cribs");
    sub->require_subcommand(1);
    auto add_machine = [&](CLI::App* s) {
        s->add_option("--components", sbo.components, "Superimposed components")->check(CLI::Range(1, 200));
        s->add_option("--max-slide", sbo.max_slide, "Largest slide of one component")->check(CLI::Range(0, 1000));
        s->add_flag("--tabulated", sbo.tabulated, "Use the hand-tabulated three-component table");
    };
    auto* stable = sub->add_subcommand("table", "Slide distribution and scores");
    add_machine(stable);
    bind(stable, [&] { return cmd_sub_table(sbo, out); });
    auto* scrib = sub->add_subcommand("crib", "Score a crib");
    add_machine(scrib);
    scrib->add_option("--cipher", sbo.cipher, "Cipher letters");
    scrib->add_option("--crib", sbo.crib, "Guessed plain letters");
    scrib->add_option("--offset", sbo.offset, "Crib position in the cipher");
    scrib->add_option("--slides", sbo.slides, "Comma-separated slides instead of cipher and crib");
    scrib->add_option("--prior-odds", sbo.prior, "Prior odds, e.g. 0.5 or 1/2");
    bind(scrib, [&] { return cmd_sub_crib(sbo, out); });
    auto* ssim = sub->add_subcommand("simulate", "Right and wrong cribs on synthetic traffic");
    add_machine(ssim);
    ssim->add_option("--seed", sbo.seed, "Random seed");
    ssim->add_option("--trials", sbo.trials, "Messages")->check(CLI::Range(0, 1'000'000));
    ssim->add_option("--length", sbo.length, "Message length")->check(CLI::Range(1, 1'000'000));
    ssim->add_option("--crib-length", sbo.crib_length, "Crib length");
    ssim->add_option("--prior-odds", sbo.prior, "Prior odds");
    bind(ssim, [&] { return cmd_sub_simulate(sbo, out); });

    // repeats
    RepOpts ro;
    auto* rep = app.add_subcommand("repeats", "Repetition figures and fit scores");
    rep->require_subcommand(1);
    auto* rfig = rep->add_subcommand("figure", "Repetition figure of two messages");
    rfig->add_option("--m1", ro.m1, "First message file")->required();
    rfig->add_option("--m2", ro.m2, "Second message file")->required();
    rfig->add_option("--distance", ro.distance, "Position in the first message under which the second starts")->required();
    rfig->add_flag("--literal", ro.literal, "Take --m1 and --m2 as the letters themselves");
    bind(rfig, [&] { return cmd_rep_figure(ro, out); });
    auto* rpar = rep->add_subcommand("params", "Estimate repeat-rate parameters from a corpus");
    rpar->add_option("--corpus", ro.corpus, "Text file")->required();
    rpar->add_option("--max-r", ro.max_r, "Longest run tabulated")->check(CLI::Range(2, 64));
    bind(rpar, [&] { return cmd_rep_params(ro, out); });
    auto* rsc = rep->add_subcommand("score", "Score a repetition figure");
    rsc->add_option("--figure", ro.figure, "Figure, e.g. XOOX or ^{8}XOOX^{11}")->required();
    rsc->add_option("--params", ro.params, "Parameters from 'repeats params'");
    rsc->add_flag("--simple", ro.simple, "Independent-letters theory");
    rsc->add_option("--beta", ro.beta, "Coincidence rate for --simple")->check(CLI::Range(0.0, 1.0));
    rsc->add_option("--stats", ro.stats, "Letter statistics for beta");
    bind(rsc, [&] { return cmd_rep_score(ro, out); });
    auto* rsim = rep->add_subcommand("simulate", "Right and wrong fits of simulated messages");
    rsim->add_option("--seed", ro.seed, "Random seed");
    rsim->add_option("--trials", ro.trials, "Pairs of each kind")->check(CLI::Range(1, 100'000));
    rsim->add_option("--overlap", ro.overlap, "Overlap length")->check(CLI::Range(1, 1'000'000));
    rsim->add_option("--stats", ro.stats, "Letter statistics");
    rsim->add_option("--beta", ro.beta, "Coincidence rate used for scoring")->check(CLI::Range(0.0, 1.0));
    rsim->add_flag("--verbose", ro.verbose, "List every score");
    bind(rsim, [&] { return cmd_rep_simulate(ro, out); });

    // transpose
    TrOpts to;
    auto* tr = app.add_subcommand("transpose", "Columnar transposition");
    tr->require_subcommand(1);
    auto add_table = [&](CLI::App* s) {
        s->add_option("--bigrams", to.bigrams, "Bigram statistics (JSON or TSV)");
        s->add_option("--table", to.table, "Exclusive score table (TSV)");
        s->add_option("--fill", to.fill, "Score for pairs missing from --table");
    };
    auto* tscore = tr->add_subcommand("score", "Score a column against every window of a message");
    add_table(tscore);
    tscore->add_option("--probe", to.probe, "Probe column letters")->required();
    tscore->add_option("--message", to.message, "Message file")->required();
    bind(tscore, [&] { return cmd_tr_score(to, out); });
    auto* tpair = tr->add_subcommand("pair", "Score one column following another");
    add_table(tpair);
    tpair->add_option("--earlier", to.earlier, "Earlier column")->required();
    tpair->add_option("--later", to.later, "Later column")->required();
    bind(tpair, [&] { return cmd_tr_pair(to, out); });
    auto* ttable = tr->add_subcommand("table", "Exclusive bigram score table");
    ttable->add_option("--bigrams", to.bigrams, "Bigram statistics")->required();
    bind(ttable, [&] { return cmd_tr_table(to, out); });
    auto* tbot = tr->add_subcommand("bottomprob", "Probability that a letter ends a column");
    tbot->add_option("--length", to.length, "Message length")->required();
    tbot->add_option("--pos", to.pos, "Letter position, from 1")->required();
    tbot->add_option("--keys", to.keys, "Key lengths: 15, 10..20 or 12,14")->required();
    bind(tbot, [&] { return cmd_tr_bottom(to, out); });
    auto* tmk = tr->add_subcommand("markov-check", "Convergence of the letter chain");
    tmk->add_option("--bigrams", to.bigrams, "Bigram statistics")->required();
    tmk->add_option("--tol", to.tol, "Tolerance")->check(CLI::PositiveNumber);
    tmk->add_option("--max-n", to.max_n, "Largest power tried")->check(CLI::Range(1, 1'000'000));
    bind(tmk, [&] { return cmd_tr_markov(to, out); });
    auto* tpat = tr->add_subcommand("pattern", "Probability of a gapped letter pattern");
    tpat->add_option("--pattern", to.pattern, "Letters with '.' for unknowns, e.g. S...T")->required();
    tpat->add_option("--bigrams", to.bigrams, "Bigram statistics")->required();
    bind(tpat, [&] { return cmd_tr_pattern(to, out); });
    for (bool enc : {true, false}) {
        auto* s = tr->add_subcommand(enc ? "encipher" : "decipher", enc ? "Encipher text" : "Decipher text");
        s->add_option("--key", to.key, "Column order, e.g. 5,11,8,7")->required();
        s->add_option("--input", to.input, "Input file");
        s->add_option("--text", to.text, "Input given inline");
        bind(s, [&, enc] { return cmd_tr_crypt(to, enc, out); });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << deepest(&app)->help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << deepest(&app)->help();
        return kExitUsage;
    }

    try {
        return action ? action() : kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
}

}  // namespace banbury::cli
