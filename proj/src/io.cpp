#include "bq/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <system_error>

#include <json.hpp>

namespace bq {

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void advance() { ++pos_; }

    // Unsigned decimal; the caller handles the sign.
    bool number(double& out) {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '.') return false;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        const auto [ptr, ec] = std::from_chars(first, last, out);
        if (ec == std::errc::result_out_of_range) {
            throw ParseError("number out of range", pos_);
        }
        if (ec != std::errc()) return false;
        pos_ += static_cast<std::size_t>(ptr - first);
        return true;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int read_sign(Reader& r) {
    const char c = r.peek();
    if (c == '+' || c == '-') {
        r.advance();
        return c == '-' ? -1 : 1;
    }
    return 1;
}

// Magnitude of one real or imaginary term; sets `imag` when it ends in 'i'.
double read_term(Reader& r, bool& imag) {
    const std::size_t start = r.pos();
    double v = 1.0;
    const bool has_number = r.number(v);
    imag = false;
    if (r.peek() == 'i') {
        r.advance();
        imag = true;
    } else if (!has_number) {
        throw ParseError("malformed complex literal", start);
    }
    return v;
}

Complex read_complex(Reader& r) {
    const int s1 = read_sign(r);
    bool imag1 = false;
    const double v1 = s1 * read_term(r, imag1);
    if (imag1) {
        return {0.0, v1};
    }
    const char c = r.peek();
    if (c != '+' && c != '-') {
        return {v1, 0.0};
    }
    const int s2 = read_sign(r);
    const std::size_t at = r.pos();
    bool imag2 = false;
    const double v2 = s2 * read_term(r, imag2);
    if (!imag2) {
        throw ParseError("expected imaginary part ending in 'i'", at);
    }
    return {v1, v2};
}

BiQuat parse_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
    }
    if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
        throw ParseError("JSON biquaternion needs \"re\" and \"im\" arrays", 0);
    }
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (!re.is_array() || !im.is_array() || re.size() != 4 || im.size() != 4) {
        throw ParseError("JSON \"re\" and \"im\" must each hold 4 numbers", 0);
    }
    BiQuat q;
    for (int k = 0; k < 4; ++k) {
        if (!re[k].is_number() || !im[k].is_number()) {
            throw ParseError("JSON components must be numbers", 0);
        }
        q[k + 1] = {re[k].get<double>(), im[k].get<double>()};
    }
    return q;
}

} // namespace

BiQuat parse_biquat(std::string_view text) {
    Reader r(text);
    if (r.peek() == '{') {
        return parse_json(text);
    }
    BiQuat q;
    int count = 0;
    while (true) {
        if (count < 4) {
            q[count + 1] = read_complex(r);
        } else {
            read_complex(r);
        }
        ++count;
        if (r.at_end()) break;
        if (r.peek() != ',') {
            throw ParseError("expected ',' between components", r.pos());
        }
        r.advance();
    }
    if (count != 4) {
        throw ParseError("expected 4 components, found " + std::to_string(count), text.size());
    }
    for (int k = 1; k <= 4; ++k) {
        if (!std::isfinite(q[k].real()) || !std::isfinite(q[k].imag())) {
            throw ParseError("components must be finite", 0);
        }
    }
    return q;
}

Quat parse_quat(std::string_view text) {
    const BiQuat q = parse_biquat(text);
    for (int k = 1; k <= 4; ++k) {
        if (q[k].imag() != 0.0) {
            throw ParseError("expected a real quaternion, component " + std::to_string(k) +
                                 " is complex",
                             0);
        }
    }
    return q.real_part();
}

std::string format_double(double x) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ec == std::errc() ? ptr : buf);
}

std::string format_complex(Complex z) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0 && !std::signbit(im)) {
        return format_double(re);
    }
    if (re == 0.0 && !std::signbit(re)) {
        return format_double(im) + "i";
    }
    return format_double(re) + (std::signbit(im) ? "-" : "+") + format_double(std::abs(im)) + "i";
}

std::string format_biquat(const BiQuat& q, Style style) {
    std::string out;
    switch (style) {
    case Style::plain:
        for (int k = 1; k <= 4; ++k) {
            out += (k > 1 ? ", " : "") + format_complex(q[k]);
        }
        return out;
    case Style::json: {
        std::string re, im;
        for (int k = 1; k <= 4; ++k) {
            re += (k > 1 ? "," : "") + format_double(q[k].real());
            im += (k > 1 ? "," : "") + format_double(q[k].imag());
        }
        return "{\"re\":[" + re + "],\"im\":[" + im + "]}";
    }
    case Style::unicode: {
        static const char* const units[] = {"", "î", "ĵ", "k̂"};
        for (int k = 1; k <= 4; ++k) {
            const Complex z = q[k];
            std::string c = format_complex(z);
            if (k > 1 && z.real() != 0.0 && z.imag() != 0.0) {
                c = "(" + c + ")";
            }
            out += (k > 1 ? " + " : "") + c + units[k - 1];
        }
        return out;
    }
    }
    return out;
}

std::string format_quat(const Quat& q, Style style) { return format_biquat(BiQuat(q), style); }

} // namespace bq
