#include "pcr/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "pcr/errors.hpp"

namespace pcr {

namespace {

// Whitespace tokenizer that remembers line/column for error reports.
class Tokens {
public:
    explicit Tokens(std::istream& in) {
        std::string line;
        int lineno = 1;
        while (std::getline(in, line)) {
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
                if (i > start)
                    toks_.push_back({line.substr(start, i - start), lineno, static_cast<int>(start) + 1});
            }
            ++lineno;
        }
        last_line_ = lineno;
    }

    bool done() const { return pos_ >= toks_.size(); }

    int next_int(const char* what) {
        if (done()) throw ParseError(std::string("unexpected end of file, expected ") + what, last_line_, 1);
        const auto& t = toks_[pos_++];
        try {
            std::size_t used = 0;
            int v = std::stoi(t.text, &used);
            if (used != t.text.size()) throw std::invalid_argument("");
            return v;
        } catch (...) {
            throw ParseError(std::string("expected ") + what + ", got '" + t.text + "'", t.line, t.col);
        }
    }

    std::pair<int, int> location() const {
        if (pos_ < toks_.size()) return {toks_[pos_].line, toks_[pos_].col};
        return {last_line_, 1};
    }

private:
    struct Tok {
        std::string text;
        int line;
        int col;
    };
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
    int last_line_ = 1;
};

}  // namespace

BitMatrix read_plain(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    int lineno = 0;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string bits;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char ch = line[i];
            if (ch == ' ' || ch == '\t' || ch == '\r') continue;
            if (ch != '0' && ch != '1')
                throw ParseError(std::string("invalid character '") + ch + "' in matrix row", lineno,
                                 static_cast<int>(i) + 1);
            bits.push_back(ch);
        }
        if (bits.empty()) continue;
        if (!rows.empty() && bits.size() != width)
            throw ParseError("row length mismatch: expected " + std::to_string(width) + " columns, got " +
                                 std::to_string(bits.size()),
                             lineno, 1);
        width = bits.size();
        rows.push_back(std::move(bits));
    }
    if (rows.empty()) throw ParseError("empty matrix file", lineno ? lineno : 1, 1);
    return BitMatrix::from_strings(rows);
}

std::string write_plain(const BitMatrix& m) {
    std::string out;
    for (const auto& row : m.to_strings()) {
        out += row;
        out += '\n';
    }
    return out;
}

BitMatrix read_alist(std::istream& in) {
    Tokens toks(in);
    int n = toks.next_int("column count n");
    int m = toks.next_int("row count m");
    if (n < 1 || m < 0) {
        auto [l, c] = toks.location();
        throw ParseError("invalid alist dimensions", l, c);
    }
    toks.next_int("max column degree");
    toks.next_int("max row degree");
    std::vector<int> col_deg(n), row_deg(m);
    for (int i = 0; i < n; ++i) col_deg[i] = toks.next_int("column degree");
    for (int j = 0; j < m; ++j) row_deg[j] = toks.next_int("row degree");

    BitMatrix mat(m, n);
    for (int i = 0; i < n; ++i) {
        for (int t = 0; t < col_deg[i]; ++t) {
            auto [l, c] = toks.location();
            int j = toks.next_int("row index");
            if (j == 0) {  // zero padding counts against nothing
                --t;
                continue;
            }
            if (j < 1 || j > m) throw ParseError("row index out of range in column list", l, c);
            mat.set(j - 1, i, true);
        }
    }
    for (int j = 0; j < m; ++j) {
        int seen = 0;
        for (int t = 0; t < row_deg[j]; ++t) {
            auto [l, c] = toks.location();
            int i = toks.next_int("column index");
            if (i == 0) continue;
            if (i < 1 || i > n) throw ParseError("column index out of range in row list", l, c);
            if (!mat.get(j, i - 1))
                throw ParseError("row list disagrees with column lists", l, c);
            ++seen;
        }
        if (seen != mat.row_weight(j)) {
            auto [l, c] = toks.location();
            throw ParseError("row degree mismatch in row " + std::to_string(j + 1), l, c);
        }
    }
    return mat;
}

std::string write_alist(const BitMatrix& m) {
    std::ostringstream out;
    const int n = m.cols(), rows = m.rows();
    int max_col = 0, max_row = 0;
    for (int i = 0; i < n; ++i) max_col = std::max(max_col, m.col_weight(i));
    for (int j = 0; j < rows; ++j) max_row = std::max(max_row, m.row_weight(j));
    out << n << " " << rows << "\n" << max_col << " " << max_row << "\n";
    for (int i = 0; i < n; ++i) out << m.col_weight(i) << (i + 1 < n ? " " : "\n");
    for (int j = 0; j < rows; ++j) out << m.row_weight(j) << (j + 1 < rows ? " " : "\n");
    for (int i = 0; i < n; ++i) {
        bool first = true;
        for (int j = 0; j < rows; ++j)
            if (m.get(j, i)) {
                if (!first) out << " ";
                out << (j + 1);
                first = false;
            }
        out << "\n";
    }
    for (int j = 0; j < rows; ++j) {
        bool first = true;
        for (int i = 0; i < n; ++i)
            if (m.get(j, i)) {
                if (!first) out << " ";
                out << (i + 1);
                first = false;
            }
        out << "\n";
    }
    return out.str();
}

namespace {

constexpr char kB64[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char ch) {
    if (ch >= 'A' && ch <= 'Z') return ch - 'A';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 26;
    if (ch >= '0' && ch <= '9') return ch - '0' + 52;
    if (ch == '+') return 62;
    if (ch == '/') return 63;
    return -1;
}

}  // namespace

std::string to_base64(const BitMatrix& m) {
    std::vector<unsigned char> bytes{
        static_cast<unsigned char>(m.rows() & 0xff), static_cast<unsigned char>(m.rows() >> 8),
        static_cast<unsigned char>(m.cols() & 0xff), static_cast<unsigned char>(m.cols() >> 8)};
    unsigned char acc = 0;
    int nbits = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) {
            acc |= static_cast<unsigned char>(m.get(r, c)) << nbits;
            if (++nbits == 8) {
                bytes.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits) bytes.push_back(acc);

    std::string out;
    for (std::size_t i = 0; i < bytes.size(); i += 3) {
        std::uint32_t v = bytes[i] << 16;
        if (i + 1 < bytes.size()) v |= bytes[i + 1] << 8;
        if (i + 2 < bytes.size()) v |= bytes[i + 2];
        out += kB64[(v >> 18) & 63];
        out += kB64[(v >> 12) & 63];
        out += i + 1 < bytes.size() ? kB64[(v >> 6) & 63] : '=';
        out += i + 2 < bytes.size() ? kB64[v & 63] : '=';
    }
    return out;
}

BitMatrix from_base64(const std::string& text) {
    std::vector<unsigned char> bytes;
    std::uint32_t v = 0;
    int have = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '=') break;
        int val = b64_value(ch);
        if (val < 0) throw ParseError("invalid base64 character", 1, static_cast<int>(i) + 1);
        v = (v << 6) | static_cast<std::uint32_t>(val);
        if (++have == 4) {
            bytes.push_back((v >> 16) & 0xff);
            bytes.push_back((v >> 8) & 0xff);
            bytes.push_back(v & 0xff);
            v = 0;
            have = 0;
        }
    }
    if (have >= 2) bytes.push_back((v >> (have * 6 - 8)) & 0xff);
    if (have >= 3) bytes.push_back((v >> (have * 6 - 16)) & 0xff);

    if (bytes.size() < 4) throw ParseError("base64 matrix too short", 1, 1);
    int rows = bytes[0] | (bytes[1] << 8);
    int cols = bytes[2] | (bytes[3] << 8);
    std::size_t need = 4 + (static_cast<std::size_t>(rows) * cols + 7) / 8;
    if (cols < 1 || cols > BitMatrix::kMaxCols || bytes.size() < need)
        throw ParseError("base64 matrix is truncated or malformed", 1, 1);
    BitMatrix m(rows, cols);
    std::size_t bit = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c, ++bit)
            m.set(r, c, (bytes[4 + (bit >> 3)] >> (bit & 7)) & 1);
    return m;
}

BitMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path, 1, 1);
    // Plain files contain only 0/1 and whitespace; alist files always carry
    // degree counts >= 2 somewhere.
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    bool plain = true;
    for (char ch : content)
        if (ch != '0' && ch != '1' && ch != ' ' && ch != '\t' && ch != '\r' && ch != '\n') {
            plain = false;
            break;
        }
    std::istringstream stream(content);
    if (plain) return read_plain(stream);
    return read_alist(stream);
}

}  // namespace pcr
