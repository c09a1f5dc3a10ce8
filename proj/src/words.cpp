#include "msl/words.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace msl {

FiniteWord FiniteWord::repeated(int times) const {
    if (times < 0) throw std::invalid_argument("repeated: negative count");
    FiniteWord r;
    r.digits.reserve(digits.size() * times);
    for (int i = 0; i < times; ++i) r.digits.insert(r.digits.end(), digits.begin(), digits.end());
    return r;
}

FiniteWord transpose(const FiniteWord& w) {
    FiniteWord r(w);
    std::reverse(r.digits.begin(), r.digits.end());
    return r;
}

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
            if (!cur.empty()) out.push_back(cur), cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

long parse_positive(const std::string& s, const std::string& what, size_t token_index) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("word parse error at token " + std::to_string(token_index) + ": bad " + what + " '" + s + "'");
    long v = std::stol(s);
    if (v == 0)
        throw std::invalid_argument("word parse error at token " + std::to_string(token_index) + ": zero " + what);
    return v;
}

FiniteWord parse_tokens(const std::vector<std::string>& toks, int* star_pos) {
    FiniteWord w;
    if (star_pos) *star_pos = -1;
    for (size_t i = 0; i < toks.size(); ++i) {
        std::string t = toks[i];
        bool starred = false;
        if (!t.empty() && t.back() == '*') {
            starred = true;
            t.pop_back();
        }
        auto us = t.find('_');
        long digit, mult = 1;
        if (us == std::string::npos) {
            digit = parse_positive(t, "digit", i);
        } else {
            digit = parse_positive(t.substr(0, us), "digit", i);
            mult = parse_positive(t.substr(us + 1), "multiplicity", i);
        }
        if (starred) {
            if (!star_pos) throw std::invalid_argument("unexpected '*' in word literal");
            if (*star_pos >= 0 || mult != 1)
                throw std::invalid_argument("word parse error: misplaced '*'");
            *star_pos = static_cast<int>(w.size());
        }
        for (long k = 0; k < mult; ++k) w.digits.push_back(static_cast<int>(digit));
    }
    return w;
}

}  // namespace

FiniteWord parse_compact(const std::string& text) {
    return parse_tokens(tokens_of(text), nullptr);
}

std::pair<FiniteWord, int> parse_starred(const std::string& text) {
    int star = -1;
    FiniteWord w = parse_tokens(tokens_of(text), &star);
    if (star < 0) throw std::invalid_argument("starred word literal has no '*'");
    return {w, star};
}

std::string render_compact(const FiniteWord& w) {
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!first) os << ' ';
        first = false;
        os << w[i];
        if (j - i > 1) os << '_' << (j - i);
        i = j;
    }
    return os.str();
}

namespace {

// Smallest period length of w (w must be a power of its primitive root).
size_t primitive_root_length(const FiniteWord& w) {
    for (size_t len = 1; len <= w.size(); ++len) {
        if (w.size() % len != 0) continue;
        bool ok = true;
        for (size_t i = len; i < w.size() && ok; ++i) ok = w[i] == w[i - len];
        if (ok) return len;
    }
    return w.size();
}

}  // namespace

OneSidedWord::OneSidedWord(FiniteWord pre, FiniteWord per) : preperiod(std::move(pre)), period(std::move(per)) {
    if (period.empty()) throw std::invalid_argument("OneSidedWord: empty period");
    size_t root = primitive_root_length(period);
    if (root < period.size()) period.digits.resize(root);
    // minimal preperiod: absorb trailing preperiod digits equal to the
    // period's last digit by rotating the period
    while (!preperiod.empty() && preperiod.digits.back() == period.digits.back()) {
        preperiod.digits.pop_back();
        std::rotate(period.digits.begin(), period.digits.end() - 1, period.digits.end());
    }
}

FiniteWord OneSidedWord::prefix(size_t n) const {
    FiniteWord r;
    r.digits.reserve(n);
    for (size_t k = 0; k < n; ++k) r.digits.push_back(digit_at(k));
    return r;
}

std::optional<size_t> first_difference(const OneSidedWord& a, const OneSidedWord& b) {
    size_t bound = std::max(a.preperiod.size(), b.preperiod.size()) +
                   std::lcm(a.period.size(), b.period.size()) + 1;
    for (size_t k = 0; k < bound; ++k)
        if (a.digit_at(k) != b.digit_at(k)) return k;
    return std::nullopt;
}

BiInfiniteSequence BiInfiniteSequence::shifted(long k) const {
    BiInfiniteSequence r;
    r.left = backward_from(k);
    r.core = FiniteWord{digit_at(k)};
    r.right = forward_from(k + 1);
    return r;
}

BiInfiniteSequence BiInfiniteSequence::reversed() const {
    // new(i) = old(-i)
    BiInfiniteSequence r;
    r.core = FiniteWord{digit_at(0)};
    r.left = forward_from(1);   // new positions -1,-2,... are old 1,2,...
    r.right = backward_from(0); // new positions 1,2,... are old -1,-2,...
    return r;
}

OneSidedWord BiInfiniteSequence::forward_from(long i) const {
    long rtail_start = static_cast<long>(core.size()) + static_cast<long>(right.preperiod.size());
    size_t len = right.period.size();
    if (i >= rtail_start) {
        size_t off = static_cast<size_t>(i - rtail_start) % len;
        FiniteWord per;
        for (size_t t = 0; t < len; ++t) per.digits.push_back(right.period[(off + t) % len]);
        return OneSidedWord(FiniteWord{}, per);
    }
    FiniteWord pre;
    for (long j = i; j < rtail_start; ++j) pre.digits.push_back(digit_at(j));
    return OneSidedWord(pre, right.period);
}

OneSidedWord BiInfiniteSequence::backward_from(long i) const {
    // digits at i-1, i-2, ...; eventually the left period read outward
    long lpre = static_cast<long>(left.preperiod.size());
    size_t len = left.period.size();
    if (i - 1 < -lpre) {
        size_t off = static_cast<size_t>(-i - lpre) % len;
        FiniteWord per;
        for (size_t t = 0; t < len; ++t) per.digits.push_back(left.period[(off + t) % len]);
        return OneSidedWord(FiniteWord{}, per);
    }
    FiniteWord pre;
    for (long j = i - 1; j >= -lpre; --j) pre.digits.push_back(digit_at(j));
    return OneSidedWord(pre, left.period);
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Splits "pre over(p) post" into parts; at most one over(...) allowed.
struct SideParts {
    std::string before, inside, after;
    bool has_over = false;
};

SideParts split_over(const std::string& s) {
    SideParts r;
    size_t pos = s.find("over(");
    if (pos == std::string::npos) {
        r.before = s;
        return r;
    }
    size_t close = s.find(')', pos);
    if (close == std::string::npos) throw std::invalid_argument("sequence literal: unterminated over(");
    if (s.find("over(", close) != std::string::npos)
        throw std::invalid_argument("sequence literal: multiple over() on one side");
    r.has_over = true;
    r.before = s.substr(0, pos);
    r.inside = s.substr(pos + 5, close - pos - 5);
    r.after = s.substr(close + 1);
    return r;
}

}  // namespace

OneSidedWord parse_one_sided(const std::string& text) {
    SideParts p = split_over(text);
    if (!p.has_over) throw std::invalid_argument("one-sided literal needs over(...): " + text);
    if (!trim(p.after).empty()) throw std::invalid_argument("one-sided literal: digits after over(): " + text);
    return OneSidedWord(parse_compact(p.before), parse_compact(p.inside));
}

BiInfiniteSequence parse_sequence(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == ';') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.size() > 3) throw std::invalid_argument("sequence literal: too many ';'");

    std::string left_text, core_text, right_text;
    if (parts.size() == 3) {
        left_text = parts[0];
        core_text = parts[1];
        right_text = parts[2];
    } else if (parts.size() == 2) {
        // disambiguate by which side carries over(...)
        bool o0 = parts[0].find("over(") != std::string::npos;
        bool o1 = parts[1].find("over(") != std::string::npos;
        if (o0 && !o1) {
            left_text = parts[0];
            core_text = parts[1];
        } else if (!o0 && o1) {
            core_text = parts[0];
            right_text = parts[1];
        } else {
            throw std::invalid_argument("sequence literal: ambiguous two-part form");
        }
    } else {
        core_text = parts[0];
    }

    BiInfiniteSequence seq;
    seq.core = parse_compact(core_text);

    if (!trim(left_text).empty()) {
        SideParts p = split_over(left_text);
        if (!p.has_over) throw std::invalid_argument("left tail needs over(...)");
        if (!trim(p.before).empty())
            throw std::invalid_argument("left tail: digits before over() are unreachable");
        // natural reading ...(P)(P) pre | core ; stored outward
        FiniteWord pre = transpose(parse_compact(p.after));
        FiniteWord per = transpose(parse_compact(p.inside));
        seq.left = OneSidedWord(pre, per);
    } else if (parts.size() == 3) {
        throw std::invalid_argument("sequence literal: empty left part");
    }

    if (!trim(right_text).empty()) {
        SideParts p = split_over(right_text);
        if (!p.has_over) throw std::invalid_argument("right tail needs over(...)");
        if (!trim(p.after).empty())
            throw std::invalid_argument("right tail: digits after over() are unreachable");
        seq.right = OneSidedWord(parse_compact(p.before), parse_compact(p.inside));
    } else if (parts.size() == 3) {
        throw std::invalid_argument("sequence literal: empty right part");
    }

    if (seq.core.empty()) throw std::invalid_argument("sequence literal: empty core");
    if (seq.left.period.empty() || seq.right.period.empty())
        throw std::invalid_argument("sequence literal: both tails required for a bi-infinite sequence");
    return seq;
}

std::string render_sequence(const BiInfiniteSequence& seq) {
    std::ostringstream os;
    os << "over(" << render_compact(transpose(seq.left.period)) << ")";
    if (!seq.left.preperiod.empty()) os << " " << render_compact(transpose(seq.left.preperiod));
    os << " ; " << render_compact(seq.core) << " ; ";
    if (!seq.right.preperiod.empty()) os << render_compact(seq.right.preperiod) << " ";
    os << "over(" << render_compact(seq.right.period) << ")";
    return os.str();
}

namespace {

const char* kForbiddenTexts[13] = {
    "1 2 1",
    "2_2 1 2 2_2 1",
    "2_3 1 2 2_2",
    "2_4 2 1 2_2 1_2",
    "2_3 1_2 2_3 2 1 2_2 1_2 2_3",
    "2_2 1_2 2_3 2 1 2_2 1_2 2_3 1",
    "1_2 2_2 1_2 2_3 2 1 2_2 1_2 2_3",
    "2_2 1 2_2 1_2 2_3 2 1 2_2 1_2 2_5",
    "1 2_2 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1",
    "2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1_2",
    "2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1 2_2 1 2",
    "1 2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1 2_2 1_3",
    "2 1 2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1 2_2 1_2 2_2",
};

}  // namespace

const std::vector<FiniteWord>& forbidden_patterns() {
    static const std::vector<FiniteWord> patterns = [] {
        std::set<FiniteWord> set;
        for (const char* t : kForbiddenTexts) {
            FiniteWord w = parse_compact(t);
            set.insert(w);
            set.insert(transpose(w));
        }
        FiniteWord extra = parse_compact("2 1_2 2_4 1 2_2 1_2 2_3");
        set.insert(extra);
        set.insert(transpose(extra));
        // Strings 1 and 3 are palindromes, so deduplication leaves
        // 13 + 11 + 2 = 26 distinct words.
        std::vector<FiniteWord> v(set.begin(), set.end());
        if (v.size() != 26) throw std::logic_error("forbidden pattern set size changed");
        return v;
    }();
    return patterns;
}

std::vector<long> find_pattern(const BiInfiniteSequence& hay, const FiniteWord& needle,
                               long from, long to) {
    std::vector<long> out;
    if (needle.empty()) return out;
    for (long s = from; s < to; ++s) {
        bool ok = true;
        for (size_t k = 0; k < needle.size() && ok; ++k)
            ok = hay.digit_at(s + static_cast<long>(k)) == needle[k];
        if (ok) out.push_back(s);
    }
    return out;
}

namespace {

MembershipResult scan_window(const OneSidedWord& w, size_t window) {
    for (int d : w.preperiod.digits)
        if (d != 1 && d != 2) throw std::invalid_argument("y_membership: digit outside {1,2}");
    for (int d : w.period.digits)
        if (d != 1 && d != 2) throw std::invalid_argument("y_membership: digit outside {1,2}");
    const auto& pats = forbidden_patterns();
    for (size_t s = 0; s < window; ++s) {
        for (size_t pi = 0; pi < pats.size(); ++pi) {
            const FiniteWord& p = pats[pi];
            bool ok = true;
            for (size_t k = 0; k < p.size() && ok; ++k) ok = w.digit_at(s + k) == p[k];
            if (ok) return MembershipResult{false, s, pi};
        }
    }
    return MembershipResult{true, std::nullopt, std::nullopt};
}

}  // namespace

MembershipResult y_membership(const OneSidedWord& w) {
    size_t maxlen = 0;
    for (const auto& p : forbidden_patterns()) maxlen = std::max(maxlen, p.size());
    // Any occurrence in an eventually periodic word has a representative
    // starting within preperiod + one period; scanning two periods plus the
    // maximal pattern length covers it with room to spare.
    size_t window = w.preperiod.size() + 2 * w.period.size() + maxlen;
    return scan_window(w, window);
}

MembershipResult y_membership(const FiniteWord& w) {
    for (int d : w.digits)
        if (d != 1 && d != 2) throw std::invalid_argument("y_membership: digit outside {1,2}");
    const auto& pats = forbidden_patterns();
    for (size_t s = 0; s < w.size(); ++s) {
        for (size_t pi = 0; pi < pats.size(); ++pi) {
            const FiniteWord& p = pats[pi];
            if (s + p.size() > w.size()) continue;
            bool ok = true;
            for (size_t k = 0; k < p.size() && ok; ++k) ok = w[s + k] == p[k];
            if (ok) return MembershipResult{false, s, pi};
        }
    }
    return MembershipResult{true, std::nullopt, std::nullopt};
}

}  // namespace msl
