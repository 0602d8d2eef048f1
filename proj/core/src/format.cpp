#include "czsplit/format.hpp"

#include <cctype>
#include <sstream>

namespace czsplit {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace((unsigned char)s[b])) ++b;
    while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
    return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
    std::string t = strip(s);
    if (t.empty()) throw Error(std::string("empty ") + what);
    std::uint64_t v = 0;
    for (char c : t) {
        if (!std::isdigit((unsigned char)c)) throw Error(std::string("malformed ") + what + ": " + s);
        v = v * 10 + (std::uint64_t)(c - '0');
        if (v > (std::uint64_t{1} << 40)) throw Error(std::string("out-of-range ") + what + ": " + s);
    }
    return v;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

FieldPtr parse_field_spec(const std::string& spec) {
    std::string s = strip(spec);
    if (s.size() < 6 || s.substr(0, 3) != "gf(" || s.back() != ')')
        throw Error("field spec must look like gf(p,m): " + spec);
    std::string inner = s.substr(3, s.size() - 4);

    std::string head = inner;
    std::optional<std::vector<std::uint32_t>> modulus;
    auto semi = inner.find(';');
    if (semi != std::string::npos) {
        head = inner.substr(0, semi);
        std::string tail = strip(inner.substr(semi + 1));
        const std::string key = "modulus=";
        if (tail.substr(0, key.size()) != key)
            throw Error("field spec options support only modulus=...: " + spec);
        std::vector<std::uint32_t> coeffs;
        for (const auto& part : split_on(tail.substr(key.size()), ','))
            coeffs.push_back((std::uint32_t)parse_u64(part, "modulus coefficient"));
        modulus = std::move(coeffs);
    }

    auto parts = split_on(head, ',');
    if (parts.size() != 2) throw Error("field spec must name p and m: " + spec);
    std::uint64_t p = parse_u64(parts[0], "characteristic");
    std::uint64_t m = parse_u64(parts[1], "degree");
    return Field::make((std::uint32_t)p, (std::uint32_t)m, std::move(modulus));
}

std::string field_spec(const Field& field) {
    std::ostringstream os;
    os << "gf(" << field.characteristic() << ',' << field.degree() << ')';
    return os.str();
}

namespace {

/// Pretty-form parser: sums of terms c, c*z^k, z^k, z with +/- separators.
Polynomial parse_pretty(FieldPtr field, const std::string& text) {
    const Field& k = *field;
    std::vector<enc_t> coeffs;
    auto bump = [&](unsigned deg, enc_t value, bool negative) {
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        enc_t v = negative ? k.neg(value) : value;
        coeffs[deg] = k.add(coeffs[deg], v);
    };

    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    bool expect_term = true;
    while (i < n) {
        char c = text[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        if (c == '+' || c == '-') {
            if (expect_term && c == '-') {
                negative = !negative;
                ++i;
                continue;
            }
            if (expect_term) throw Error("malformed polynomial: " + text);
            negative = (c == '-');
            expect_term = true;
            ++i;
            continue;
        }
        if (!expect_term) throw Error("malformed polynomial: " + text);

        std::uint64_t value = 1;
        bool saw_coeff = false;
        if (std::isdigit((unsigned char)c)) {
            value = 0;
            while (i < n && std::isdigit((unsigned char)text[i])) {
                value = value * 10 + (std::uint64_t)(text[i] - '0');
                if (value >= k.size()) throw Error("coefficient encoding out of range: " + text);
                ++i;
            }
            saw_coeff = true;
            while (i < n && std::isspace((unsigned char)text[i])) ++i;
            if (i < n && text[i] == '*') {
                ++i;
                while (i < n && std::isspace((unsigned char)text[i])) ++i;
                if (i >= n || text[i] != 'z') throw Error("malformed polynomial: " + text);
            }
        }
        unsigned deg = 0;
        if (i < n && (text[i] == 'z' || text[i] == 'Z')) {
            ++i;
            deg = 1;
            while (i < n && std::isspace((unsigned char)text[i])) ++i;
            if (i < n && text[i] == '^') {
                ++i;
                while (i < n && std::isspace((unsigned char)text[i])) ++i;
                if (i >= n || !std::isdigit((unsigned char)text[i]))
                    throw Error("malformed exponent: " + text);
                deg = 0;
                while (i < n && std::isdigit((unsigned char)text[i])) {
                    deg = deg * 10 + (unsigned)(text[i] - '0');
                    if (deg > 4096) throw Error("exponent out of range: " + text);
                    ++i;
                }
            }
        } else if (!saw_coeff) {
            throw Error("malformed polynomial: " + text);
        }
        bump(deg, (enc_t)value, negative);
        negative = false;
        expect_term = false;
    }
    if (expect_term) throw Error("malformed polynomial: " + text);
    return Polynomial(field, std::move(coeffs));
}

} // namespace

Polynomial parse_polynomial(FieldPtr field, const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) throw Error("empty polynomial");

    // Comma form: encodings little-endian. Anything with 'z' is pretty form.
    if (s.find('z') == std::string::npos && s.find('Z') == std::string::npos) {
        std::vector<enc_t> coeffs;
        for (const auto& part : split_on(s, ','))
            coeffs.push_back(field->check_range(parse_u64(part, "coefficient")));
        return Polynomial(std::move(field), std::move(coeffs));
    }
    return parse_pretty(std::move(field), s);
}

} // namespace czsplit
