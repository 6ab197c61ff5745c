#include "banbury/stats_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace banbury::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

long long parse_count(std::string_view field, std::size_t line_no) {
    field = trim(field);
    long long v = 0;
    std::size_t used = 0;
    try {
        v = std::stoll(std::string(field), &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != field.size()) {
        throw DataError("line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(field) + "'");
    }
    return v;
}

bool is_gram(std::string_view key, std::size_t len) {
    if (key.size() != len) return false;
    for (char c : key) {
        if (!is_letter(c)) return false;
    }
    return true;
}

// Splits "KEY<ws>VALUE" TSV lines, skipping blanks and '#' comments.
template <typename Fn>
void for_each_tsv_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto sep = line.find_first_of("\t ");
        if (sep == std::string_view::npos) {
            throw DataError("line " + std::to_string(line_no) + ": expected KEY<TAB>VALUE");
        }
        fn(trim(line.substr(0, sep)), trim(line.substr(sep + 1)), line_no);
    }
}

}  // namespace

long long StatsBundle::letter_total() const {
    long long t = 0;
    for (long long c : letter_counts) t += c;
    return t;
}

long long StatsBundle::bigram_total() const {
    long long t = 0;
    for (const auto& row : bigram_counts) {
        for (long long c : row) t += c;
    }
    return t;
}

LetterDistribution StatsBundle::letters() const {
    if (has_letters()) return LetterDistribution::from_counts(letter_counts);
    if (has_bigrams()) {
        LetterCounts rows{};
        for (std::size_t a = 0; a < kAlphabetSize; ++a) {
            for (long long c : bigram_counts[a]) rows[a] += c;
        }
        return LetterDistribution::from_counts(rows);
    }
    throw EmptyCorpusError();
}

BigramStats StatsBundle::bigrams() const {
    if (!has_bigrams()) throw DataError("statistics carry no bigram counts");
    return BigramStats::from_counts(bigram_counts);
}

void StatsBundle::validate() const {
    for (long long c : letter_counts) {
        if (c < 0) throw DataError("negative letter count");
    }
    for (const auto& row : bigram_counts) {
        for (long long c : row) {
            if (c < 0) throw DataError("negative bigram count");
        }
    }
    if (has_letters() && has_bigrams()) {
        const long long l = letter_total();
        const long long b = bigram_total();
        if (b != l && b != l - 1) {
            throw DataError("inconsistent totals: " + std::to_string(l) + " letters but " + std::to_string(b) +
                            " bigrams");
        }
    }
}

StatsBundle bundle_from_corpus(std::string_view letters, std::string source, bool circular, int rgram_max_r) {
    require_letters(letters, "corpus");
    if (letters.empty()) throw EmptyCorpusError();
    StatsBundle b;
    b.source = std::move(source);
    b.size = static_cast<long long>(letters.size());
    b.circular = circular;
    b.letter_counts = count_letters(letters);
    if (letters.size() >= 2) b.bigram_counts = BigramStats::from_letters(letters, circular).counts();
    if (rgram_max_r > 0) {
        auto rc = RgramCounts::from_letters(letters, rgram_max_r);
        for (int r = 1; r <= rgram_max_r; ++r) b.apparent_repeats[r] = rc.apparent_repeats(r);
    }
    return b;
}

std::string to_json(const StatsBundle& bundle) {
    ordered_json j;
    ordered_json letters = ordered_json::object();
    for (int a = 0; a < kAlphabetSize; ++a) letters[std::string(1, letter_at(a))] = bundle.letter_counts[static_cast<std::size_t>(a)];
    ordered_json bigrams = ordered_json::object();
    for (int a = 0; a < kAlphabetSize; ++a) {
        for (int b = 0; b < kAlphabetSize; ++b) {
            long long c = bundle.bigram_counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            if (c != 0) bigrams[std::string{letter_at(a), letter_at(b)}] = c;
        }
    }
    j["letter_counts"] = letters;
    j["bigram_counts"] = bigrams;
    if (!bundle.apparent_repeats.empty()) {
        ordered_json m = ordered_json::object();
        for (const auto& [r, v] : bundle.apparent_repeats) m[std::to_string(r)] = v;
        j["rgram_summary"] = {{"apparent_repeats", m}};
    }
    j["meta"] = {{"source", bundle.source}, {"size", bundle.size}, {"circular", bundle.circular}};
    return j.dump(2) + "\n";
}

StatsBundle bundle_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("malformed stats JSON: ") + e.what());
    }
    if (!j.is_object()) throw DataError("stats JSON must be an object");
    StatsBundle b;
    try {
        if (j.contains("letter_counts")) {
            for (const auto& [k, v] : j.at("letter_counts").items()) {
                if (!is_gram(k, 1)) throw DataError("letter_counts key must be a letter A-Z, got '" + k + "'");
                b.letter_counts[static_cast<std::size_t>(letter_index(k[0]))] = v.get<long long>();
            }
        }
        if (j.contains("bigram_counts")) {
            for (const auto& [k, v] : j.at("bigram_counts").items()) {
                if (!is_gram(k, 2)) throw DataError("bigram_counts key must be two letters A-Z, got '" + k + "'");
                b.bigram_counts[static_cast<std::size_t>(letter_index(k[0]))]
                               [static_cast<std::size_t>(letter_index(k[1]))] = v.get<long long>();
            }
        }
        if (j.contains("rgram_summary") && j["rgram_summary"].contains("apparent_repeats")) {
            for (const auto& [k, v] : j["rgram_summary"]["apparent_repeats"].items()) {
                b.apparent_repeats[std::stoi(k)] = v.get<long long>();
            }
        }
        if (j.contains("meta")) {
            const auto& m = j["meta"];
            b.source = m.value("source", "");
            b.size = m.value("size", 0LL);
            b.circular = m.value("circular", false);
        }
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed stats JSON: ") + e.what());
    }
    b.validate();
    return b;
}

std::string to_tsv(const StatsBundle& bundle) {
    std::ostringstream out;
    out << "# letter\tcount\n";
    for (int a = 0; a < kAlphabetSize; ++a) out << letter_at(a) << '\t' << bundle.letter_counts[static_cast<std::size_t>(a)] << '\n';
    if (bundle.has_bigrams()) {
        out << "# bigram\tcount\n";
        for (int a = 0; a < kAlphabetSize; ++a) {
            for (int b = 0; b < kAlphabetSize; ++b) {
                long long c = bundle.bigram_counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                if (c != 0) out << letter_at(a) << letter_at(b) << '\t' << c << '\n';
            }
        }
    }
    return out.str();
}

StatsBundle bundle_from_tsv(std::string_view text) {
    StatsBundle b;
    for_each_tsv_line(text, [&](std::string_view key, std::string_view value, std::size_t line_no) {
        const long long count = parse_count(value, line_no);
        if (is_gram(key, 1)) {
            b.letter_counts[static_cast<std::size_t>(letter_index(key[0]))] = count;
        } else if (is_gram(key, 2)) {
            b.bigram_counts[static_cast<std::size_t>(letter_index(key[0]))]
                           [static_cast<std::size_t>(letter_index(key[1]))] = count;
        } else {
            throw DataError("line " + std::to_string(line_no) + ": key must be a letter or bigram, got '" +
                            std::string(key) + "'");
        }
    });
    b.validate();
    b.size = b.has_letters() ? b.letter_total() : b.bigram_total();
    return b;
}

StatsBundle parse_stats(std::string_view text) {
    std::string_view t = trim(text);
    if (!t.empty() && t.front() == '{') return bundle_from_json(text);
    return bundle_from_tsv(text);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

StatsBundle read_stats_file(const std::string& path) {
    auto b = parse_stats(read_text_file(path));
    if (b.source.empty()) b.source = path;
    return b;
}

std::string to_tsv(const transposition::ExclusiveBigramTable& table) {
    std::ostringstream out;
    for (int a = 0; a < kAlphabetSize; ++a) {
        for (int b = 0; b < kAlphabetSize; ++b) {
            out << letter_at(a) << letter_at(b) << '\t' << table.score(letter_at(a), letter_at(b)) << '\n';
        }
    }
    return out.str();
}

transposition::ExclusiveBigramTable score_table_from_tsv(std::string_view text, int fill) {
    std::map<std::string, int> entries;
    for_each_tsv_line(text, [&](std::string_view key, std::string_view value, std::size_t line_no) {
        if (!is_gram(key, 2)) {
            throw DataError("line " + std::to_string(line_no) + ": key must be a bigram, got '" + std::string(key) + "'");
        }
        entries[std::string(key)] = static_cast<int>(parse_count(value, line_no));
    });
    return transposition::ExclusiveBigramTable::from_entries(entries, fill);
}

std::string to_json(const repeats::RepeatParams& p) {
    ordered_json j;
    j["max_r"] = p.max_r;
    j["letters"] = p.letters;
    j["pairs"] = p.pairs;
    j["M"] = p.apparent;
    j["N"] = p.actual;
    j["h"] = p.h;
    j["k"] = p.k;
    j["k_tail"] = p.k_tail;
    j["a0"] = p.a0;
    j["nu"] = p.nu;
    j["mu"] = p.mu;
    j["initial_mu_none"] = p.initial_mu_none;
    j["initial_mu_some"] = p.initial_mu_some;
    j["beta"] = p.beta;
    return j.dump(2) + "\n";
}

repeats::RepeatParams params_from_json(std::string_view text) {
    repeats::RepeatParams p;
    try {
        json j = json::parse(text);
        p.max_r = j.at("max_r").get<int>();
        p.letters = j.value("letters", 0LL);
        p.pairs = j.value("pairs", 0.0);
        p.apparent = j.value("M", std::vector<long long>{});
        p.actual = j.value("N", std::vector<long long>{});
        p.h = j.value("h", 0.0);
        p.k = j.value("k", std::vector<double>{});
        p.k_tail = j.value("k_tail", 0.0);
        p.a0 = j.value("a0", 0.0);
        p.nu = j.at("nu").get<double>();
        p.mu = j.at("mu").get<std::vector<double>>();
        p.initial_mu_none = j.value("initial_mu_none", p.mu);
        p.initial_mu_some = j.value("initial_mu_some", p.mu);
        p.beta = j.value("beta", 0.0);
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed repeat parameters JSON: ") + e.what());
    }
    const auto need = static_cast<std::size_t>(p.max_r) + 1;
    if (p.max_r < 0 || p.mu.size() != need || p.initial_mu_none.size() != need || p.initial_mu_some.size() != need) {
        throw DataError("repeat parameters: mu series must have max_r + 1 entries");
    }
    return p;
}

}  // namespace banbury::io
