#include "banbury/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string_view>

namespace banbury::gen {

namespace {

// Common English words in rough frequency order.
constexpr std::string_view kVocabulary[] = {
    "THE", "OF", "AND", "TO", "A", "IN", "IS", "IT", "THAT", "WAS", "FOR", "ON", "ARE", "WITH", "AS", "I",
    "HIS", "THEY", "BE", "AT", "ONE", "HAVE", "THIS", "FROM", "OR", "HAD", "BY", "NOT", "WORD", "BUT",
    "WHAT", "SOME", "WE", "CAN", "OUT", "OTHER", "WERE", "ALL", "THERE", "WHEN", "UP", "USE", "YOUR", "HOW",
    "SAID", "AN", "EACH", "SHE", "WHICH", "DO", "THEIR", "TIME", "IF", "WILL", "WAY", "ABOUT", "MANY", "THEN",
    "THEM", "WRITE", "WOULD", "LIKE", "SO", "THESE", "HER", "LONG", "MAKE", "THING", "SEE", "HIM", "TWO",
    "HAS", "LOOK", "MORE", "DAY", "COULD", "GO", "COME", "DID", "NUMBER", "SOUND", "NO", "MOST", "PEOPLE",
    "MY", "OVER", "KNOW", "WATER", "THAN", "CALL", "FIRST", "WHO", "MAY", "DOWN", "SIDE", "BEEN", "NOW",
    "FIND", "ANY", "NEW", "WORK", "PART", "TAKE", "GET", "PLACE", "MADE", "LIVE", "WHERE", "AFTER", "BACK",
    "LITTLE", "ONLY", "ROUND", "MAN", "YEAR", "CAME", "SHOW", "EVERY", "GOOD", "ME", "GIVE", "OUR", "UNDER",
    "NAME", "VERY", "THROUGH", "JUST", "FORM", "SENTENCE", "GREAT", "THINK", "SAY", "HELP", "LOW", "LINE",
    "DIFFER", "TURN", "CAUSE", "MUCH", "MEAN", "BEFORE", "MOVE", "RIGHT", "BOY", "OLD", "TOO", "SAME",
    "TELL", "DOES", "SET", "THREE", "WANT", "AIR", "WELL", "ALSO", "PLAY", "SMALL", "END", "PUT", "HOME",
    "READ", "HAND", "PORT", "LARGE", "SPELL", "ADD", "EVEN", "LAND", "HERE", "MUST", "BIG", "HIGH", "SUCH",
    "FOLLOW", "ACT", "WHY", "ASK", "MEN", "CHANGE", "WENT", "LIGHT", "KIND", "OFF", "NEED", "HOUSE",
    "PICTURE", "TRY", "US", "AGAIN", "ANIMAL", "POINT", "MOTHER", "WORLD", "NEAR", "BUILD", "SELF", "EARTH",
    "FATHER", "HEAD", "STAND", "OWN", "PAGE", "SHOULD", "COUNTRY", "FOUND", "ANSWER", "SCHOOL", "GROW",
    "STUDY", "STILL", "LEARN", "PLANT", "COVER", "FOOD", "SUN", "FOUR", "BETWEEN", "STATE", "KEEP", "EYE",
    "NEVER", "LAST", "LET", "THOUGHT", "CITY", "TREE", "CROSS", "FARM", "HARD", "START", "MIGHT", "STORY",
    "SAW", "FAR", "SEA", "DRAW", "LEFT", "LATE", "RUN", "WHILE", "PRESS", "CLOSE", "NIGHT", "REAL", "LIFE",
    "FEW", "NORTH", "OPEN", "SEEM", "TOGETHER", "NEXT", "WHITE", "CHILDREN", "BEGIN", "GOT", "WALK",
    "EXAMPLE", "EASE", "PAPER", "GROUP", "ALWAYS", "MUSIC", "THOSE", "BOTH", "MARK", "OFTEN", "LETTER",
    "UNTIL", "MILE", "RIVER", "CAR", "FEET", "CARE", "SECOND", "ENOUGH", "PLAIN", "GIRL", "USUAL", "YOUNG",
    "READY", "ABOVE", "EVER", "RED", "LIST", "THOUGH", "FEEL", "TALK", "BIRD", "SOON", "BODY", "DOG",
    "FAMILY", "DIRECT", "POSE", "LEAVE", "SONG", "MEASURE", "DOOR", "PRODUCT", "BLACK", "SHORT", "NUMERAL",
    "CLASS", "WIND", "QUESTION", "HAPPEN", "COMPLETE", "SHIP", "AREA", "HALF", "ROCK", "ORDER", "FIRE",
    "SOUTH", "PROBLEM", "PIECE", "TOLD", "KNEW", "PASS", "SINCE", "TOP", "WHOLE", "KING", "SPACE", "HEARD",
    "BEST", "HOUR", "BETTER", "TRUE", "DURING", "HUNDRED", "FIVE", "REMEMBER", "STEP", "EARLY", "HOLD",
    "WEST", "GROUND", "INTEREST", "REACH", "FAST", "VERB", "SING", "LISTEN", "SIX", "TABLE", "TRAVEL",
    "LESS", "MORNING", "TEN", "SIMPLE", "SEVERAL", "VOWEL", "TOWARD", "WAR", "LAY", "AGAINST", "PATTERN",
    "SLOW", "CENTER", "LOVE", "PERSON", "MONEY", "SERVE", "APPEAR", "ROAD", "MAP", "RAIN", "RULE", "GOVERN",
    "PULL", "COLD", "NOTICE", "VOICE", "UNIT", "POWER", "TOWN", "FINE", "CERTAIN", "FLY", "FALL", "LEAD",
    "CRY", "DARK", "MACHINE", "NOTE", "WAIT", "PLAN", "FIGURE", "STAR", "BOX", "NOUN", "FIELD", "REST",
    "CORRECT", "ABLE", "POUND", "DONE", "BEAUTY", "DRIVE", "STOOD", "CONTAIN", "FRONT", "TEACH", "WEEK",
    "FINAL", "GAVE", "GREEN", "OH", "QUICK", "DEVELOP", "OCEAN", "WARM", "FREE", "MINUTE", "STRONG",
    "SPECIAL", "MIND", "BEHIND", "CLEAR", "TAIL", "PRODUCE", "FACT", "STREET", "INCH", "MULTIPLY", "NOTHING",
    "COURSE", "STAY", "WHEEL", "FULL", "FORCE", "BLUE", "OBJECT", "DECIDE", "SURFACE", "DEEP", "MOON",
    "ISLAND", "FOOT", "SYSTEM", "BUSY", "TEST", "RECORD", "BOAT", "COMMON", "GOLD", "POSSIBLE", "PLANE",
    "STEAD", "DRY", "WONDER", "LAUGH", "THOUSAND", "AGO", "RAN", "CHECK", "GAME", "SHAPE", "EQUATE", "HOT",
    "MISS", "BROUGHT", "HEAT", "SNOW", "TIRE", "BRING", "YES", "DISTANT", "FILL", "EAST", "PAINT", "LANGUAGE",
    "AMONG", "QUITE", "JOB", "SIZE", "ZERO", "EXACT", "JOIN", "EXPECT", "MAJOR", "QUIET", "ZONE", "JUDGE",
    "EXTRA", "QUEEN", "PRIZE", "JOURNEY", "KNIFE", "FROZEN", "OXYGEN", "SQUARE", "LAZY", "SUBJECT",
};

constexpr std::size_t kVocabularySize = sizeof(kVocabulary) / sizeof(kVocabulary[0]);

}  // namespace

Letters uniform_letters(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<int> pick(0, kAlphabetSize - 1);
    Letters out(n, 'A');
    for (auto& c : out) c = letter_at(pick(rng));
    return out;
}

Letters sample_letters(const LetterDistribution& dist, std::size_t n, Rng& rng) {
    const auto& p = dist.probabilities();
    std::discrete_distribution<int> pick(p.begin(), p.end());
    Letters out(n, 'A');
    for (auto& c : out) c = letter_at(pick(rng));
    return out;
}

Letters markov_letters(const markov::TransitionMatrix& q, const markov::Vector& start, std::size_t n, Rng& rng) {
    std::vector<std::discrete_distribution<int>> rows;
    rows.reserve(kAlphabetSize);
    for (const auto& row : q.q()) rows.emplace_back(row.begin(), row.end());
    std::discrete_distribution<int> first(start.begin(), start.end());
    Letters out;
    out.reserve(n);
    if (n == 0) return out;
    int cur = first(rng);
    out.push_back(letter_at(cur));
    while (out.size() < n) {
        cur = rows[static_cast<std::size_t>(cur)](rng);
        out.push_back(letter_at(cur));
    }
    return out;
}

Letters english_like_text(std::size_t n, Rng& rng) {
    // Zipf-Mandelbrot weights over the ranked vocabulary.
    std::vector<double> weights(kVocabularySize);
    for (std::size_t i = 0; i < kVocabularySize; ++i) weights[i] = 1.0 / (static_cast<double>(i) + 2.7);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    Letters out;
    out.reserve(n + 16);
    while (out.size() < n) out.append(kVocabulary[pick(rng)]);
    out.resize(n);
    return out;
}

vigenere::Key random_vigenere_key(std::size_t period, Rng& rng) {
    return vigenere::Key(uniform_letters(period, rng));
}

transposition::Key random_transposition_key(std::size_t width, Rng& rng) {
    std::vector<int> order(width);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    return transposition::Key(std::move(order));
}

Subtractor::Subtractor(std::vector<std::vector<int>> components) : components_(std::move(components)) {
    if (components_.empty()) throw DomainError("subtractor needs at least one component");
    for (const auto& c : components_) {
        if (c.empty()) throw DomainError("subtractor component must have a positive period");
    }
}

int Subtractor::slide(std::size_t t) const {
    int s = 0;
    for (const auto& c : components_) s += c[t % c.size()];
    return mod26(s);
}

Letters Subtractor::encipher(std::string_view plain, std::size_t start) const {
    require_letters(plain, "plaintext");
    Letters out(plain.size(), 'A');
    for (std::size_t i = 0; i < plain.size(); ++i) out[i] = letter_at(letter_index(plain[i]) + slide(start + i));
    return out;
}

Letters Subtractor::decipher(std::string_view cipher, std::size_t start) const {
    require_letters(cipher, "ciphertext");
    Letters out(cipher.size(), 'A');
    for (std::size_t i = 0; i < cipher.size(); ++i) out[i] = letter_at(letter_index(cipher[i]) - slide(start + i));
    return out;
}

Subtractor random_subtractor(const std::vector<std::size_t>& periods, int max_slide, Rng& rng) {
    if (max_slide < 0) throw DomainError("max_slide must be non-negative");
    std::uniform_int_distribution<int> pick(0, max_slide);
    std::vector<std::vector<int>> comps;
    comps.reserve(periods.size());
    for (std::size_t period : periods) {
        std::vector<int> c(period);
        for (auto& s : c) s = pick(rng);
        comps.push_back(std::move(c));
    }
    return Subtractor(std::move(comps));
}

std::vector<int> random_shift_stream(std::size_t n, Rng& rng) {
    std::uniform_int_distribution<int> pick(0, kAlphabetSize - 1);
    std::vector<int> shifts(n);
    for (auto& s : shifts) s = pick(rng);
    return shifts;
}

Letters apply_shift_stream(std::string_view plain, const std::vector<int>& shifts, std::size_t start) {
    require_letters(plain, "plaintext");
    if (start + plain.size() > shifts.size()) throw DomainError("key stream too short");
    Letters out(plain.size(), 'A');
    for (std::size_t i = 0; i < plain.size(); ++i) out[i] = letter_at(letter_index(plain[i]) + shifts[start + i]);
    return out;
}

}  // namespace banbury::gen
