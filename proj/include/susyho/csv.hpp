#pragma once

// Locale-independent CSV output: 17 significant digits, '.' separator.

#include <charconv>
#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace susyho::csv {

inline std::string format(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (res.ec != std::errc{}) return "nan";
    return std::string(buf, res.ptr);
}

inline std::string format(int v) { return std::to_string(v); }

/// Complex literal in the a+bI / a-bI form accepted on the command line.
inline std::string format(std::complex<double> z) {
    std::string s = format(z.real());
    if (z.imag() == 0.0) return s;
    std::string im = format(z.imag());
    if (im.front() != '-') im.insert(im.begin(), '+');
    return s + im + "I";
}

/// RFC 4180 quoting for cells holding ',', '"' or a line break.
inline std::string quote(std::string_view cell) {
    if (cell.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(cell);
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

class Writer {
public:
    explicit Writer(std::ostream& os) : os_(os) {}

    void comment(std::string_view text) { os_ << "# " << text << '\n'; }

    void header(const std::vector<std::string>& cols) { row(cols); }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os_ << ',';
            os_ << quote(cells[i]);
        }
        os_ << '\n';
        ++rows_;
    }

    std::size_t rows_written() const { return rows_; }

private:
    std::ostream& os_;
    std::size_t rows_ = 0;
};

} // namespace susyho::csv
