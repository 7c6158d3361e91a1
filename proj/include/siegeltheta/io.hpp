#pragma once

#include <cctype>
#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "errors.hpp"
#include "siegel_point.hpp"

namespace siegeltheta {
namespace io {

// ---------------------------------------------------------------------------
// Complex literal grammar: [sign] real-part [sign imag-part] 'i' with either
// part optional ("2i", "0.1", "1+2i", "-1.5-0.3i", "i", "3e-2+1e-1i").
// Matrices are JSON-style nested arrays of these literals.
// ---------------------------------------------------------------------------

namespace parse_detail {

struct cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() const { return pos >= text.size(); }
    char peek() const { return pos < text.size() ? text[pos] : '\0'; }
    void expect(char c) {
        if (peek() != c) throw parse_error(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, pos); }
};

// number with optional exponent; returns false if nothing consumed
inline bool read_number(cursor& c, double* out) {
    const std::size_t start = c.pos;
    std::size_t p = c.pos;
    auto digits = [&](std::size_t& q) {
        const std::size_t s = q;
        while (q < c.text.size() && std::isdigit(static_cast<unsigned char>(c.text[q]))) ++q;
        return q > s;
    };
    bool any = digits(p);
    if (p < c.text.size() && c.text[p] == '.') {
        ++p;
        any = digits(p) || any;
    }
    if (!any) return false;
    if (p < c.text.size() && (c.text[p] == 'e' || c.text[p] == 'E')) {
        std::size_t q = p + 1;
        if (q < c.text.size() && (c.text[q] == '+' || c.text[q] == '-')) ++q;
        if (digits(q)) p = q;
    }
    *out = std::stod(c.text.substr(start, p - start));
    c.pos = p;
    return true;
}

// one signed term: number, number 'i', or bare 'i'
inline bool read_term(cursor& c, double* value, bool* imaginary) {
    c.skip_ws();
    double sign = 1.0;
    const std::size_t save = c.pos;
    if (c.peek() == '+' || c.peek() == '-') {
        sign = c.peek() == '-' ? -1.0 : 1.0;
        ++c.pos;
        c.skip_ws();
    }
    double mag = 0.0;
    if (read_number(c, &mag)) {
        if (c.peek() == 'i' || c.peek() == 'I') {
            ++c.pos;
            *imaginary = true;
        } else {
            *imaginary = false;
        }
        *value = sign * mag;
        return true;
    }
    if (c.peek() == 'i' || c.peek() == 'I') {
        ++c.pos;
        *value = sign;
        *imaginary = true;
        return true;
    }
    c.pos = save;
    return false;
}

inline std::complex<double> read_complex(cursor& c) {
    double v = 0.0;
    bool imag = false;
    if (!read_term(c, &v, &imag)) c.fail("expected a complex literal");
    double re = imag ? 0.0 : v;
    double im = imag ? v : 0.0;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
        double v2 = 0.0;
        bool imag2 = false;
        if (!read_term(c, &v2, &imag2)) c.fail("expected the second part of a complex literal");
        if (imag2 == imag) c.fail("complex literal repeats a part");
        if (imag2) im = v2; else re = v2;
    }
    return {re, im};
}

} // namespace parse_detail

inline std::complex<double> parse_complex(const std::string& text) {
    parse_detail::cursor c{text};
    const std::complex<double> z = parse_detail::read_complex(c);
    c.skip_ws();
    if (!c.eof()) c.fail("trailing characters after complex literal");
    return z;
}

inline std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
    parse_detail::cursor c{text};
    std::vector<std::complex<double>> out;
    c.skip_ws();
    const bool bracket = c.peek() == '[';
    if (bracket) ++c.pos;
    for (;;) {
        out.push_back(parse_detail::read_complex(c));
        c.skip_ws();
        if (c.peek() == ',') {
            ++c.pos;
            continue;
        }
        break;
    }
    if (bracket) c.expect(']');
    c.skip_ws();
    if (!c.eof()) c.fail("trailing characters after list");
    return out;
}

inline cmatrix parse_complex_matrix(const std::string& text) {
    parse_detail::cursor c{text};
    c.skip_ws();
    // scalar shorthand: a bare literal is a 1 x 1 matrix
    if (c.peek() != '[') {
        const std::complex<double> z = parse_detail::read_complex(c);
        c.skip_ws();
        if (!c.eof()) c.fail("trailing characters after scalar");
        return cmatrix::Constant(1, 1, z);
    }
    c.expect('[');
    std::vector<std::vector<std::complex<double>>> rows;
    for (;;) {
        c.skip_ws();
        c.expect('[');
        std::vector<std::complex<double>> row;
        for (;;) {
            row.push_back(parse_detail::read_complex(c));
            c.skip_ws();
            if (c.peek() == ',') {
                ++c.pos;
                continue;
            }
            break;
        }
        c.expect(']');
        rows.push_back(std::move(row));
        c.skip_ws();
        if (c.peek() == ',') {
            ++c.pos;
            continue;
        }
        break;
    }
    c.expect(']');
    c.skip_ws();
    if (!c.eof()) c.fail("trailing characters after matrix");
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n) throw parse_error("matrix must be square", 0);
    cmatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return m;
}

// "a1,...,ag;b1,...,bg" with rational entries "p/q" or integers
inline characteristic parse_characteristic(const std::string& text) {
    auto parse_rats = [&](const std::string& part, std::size_t base) {
        std::vector<rational> out;
        std::size_t p = 0;
        while (p <= part.size()) {
            std::size_t q = part.find(',', p);
            if (q == std::string::npos) q = part.size();
            const std::string tok = part.substr(p, q - p);
            const std::size_t slash = tok.find('/');
            try {
                if (slash == std::string::npos)
                    out.emplace_back(std::stoll(tok), 1);
                else
                    out.emplace_back(std::stoll(tok.substr(0, slash)),
                                     std::stoll(tok.substr(slash + 1)));
            } catch (const std::exception&) {
                throw parse_error("bad rational entry '" + tok + "'", base + p);
            }
            p = q + 1;
            if (q == part.size()) break;
        }
        return out;
    };
    const std::size_t semi = text.find(';');
    if (semi == std::string::npos) throw parse_error("characteristic needs 'a;b'", text.size());
    return characteristic(parse_rats(text.substr(0, semi), 0),
                          parse_rats(text.substr(semi + 1), semi + 1));
}

// ---------------------------------------------------------------------------
// Byte-stable report writing: fixed field order, 17 significant digits,
// '\n' line endings.
// ---------------------------------------------------------------------------

inline std::string format_sig17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += ch;
        }
    }
    return out;
}

struct eval_record {
    std::string quantity;
    std::string inputs;
    double value_re = 0.0;
    double value_im = 0.0;
    double err = 0.0;
};

struct report_config {
    std::string command;
    std::string suite;
    std::uint64_t seed = 0;
    double tol = 0.0;
    std::string format = "json";
};

inline void write_eval_report(std::ostream& os, const report_config& cfg,
                              const std::vector<eval_record>& records,
                              const std::string& version) {
    if (cfg.format == "csv") {
        os << "quantity,inputs,value_re,value_im,err\n";
        for (const auto& r : records)
            os << r.quantity << ",\"" << r.inputs << "\"," << format_sig17(r.value_re) << ','
               << format_sig17(r.value_im) << ',' << format_sig17(r.err) << '\n';
        return;
    }
    os << "{\"version\":\"" << version << "\",\"config\":{\"command\":\"" << json_escape(cfg.command)
       << "\",\"seed\":" << cfg.seed << ",\"tol\":" << format_sig17(cfg.tol) << "},\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i) os << ',';
        os << "{\"quantity\":\"" << json_escape(r.quantity) << "\",\"inputs\":\""
           << json_escape(r.inputs) << "\",\"value_re\":" << format_sig17(r.value_re)
           << ",\"value_im\":" << format_sig17(r.value_im) << ",\"err\":" << format_sig17(r.err)
           << '}';
    }
    os << "]}\n";
}

inline void write_check_report(std::ostream& os, const report_config& cfg,
                               const std::vector<check_case>& records,
                               const std::string& version) {
    if (cfg.format == "csv") {
        os << "id,ref,residual,tolerance,pass\n";
        for (const auto& r : records)
            os << r.id << ',' << r.ref << ',' << format_sig17(r.residual) << ','
               << format_sig17(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
        return;
    }
    os << "{\"version\":\"" << version << "\",\"config\":{\"command\":\"" << json_escape(cfg.command)
       << "\",\"suite\":\"" << json_escape(cfg.suite) << "\",\"seed\":" << cfg.seed
       << ",\"tol\":" << format_sig17(cfg.tol) << "},\"records\":[";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (i) os << ',';
        os << "{\"id\":\"" << json_escape(r.id) << "\",\"ref\":\"" << json_escape(r.ref)
           << "\",\"residual\":" << format_sig17(r.residual)
           << ",\"tolerance\":" << format_sig17(r.tolerance)
           << ",\"pass\":" << (r.pass ? "true" : "false") << '}';
    }
    os << "]}\n";
}

} // namespace io
} // namespace siegeltheta
