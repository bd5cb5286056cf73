#include "matdiv/matrix_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "matdiv/errors.hpp"

namespace matdiv {
namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Whitespace-separated tokens; a '[' ... ']' literal may contain spaces.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (is_space(line[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (line[i] == '[') {
            const std::size_t close = line.find(']', i);
            if (close == std::string_view::npos) throw ParseError("unterminated polynomial literal", line_no, start + 1);
            i = close + 1;
            while (i < line.size() && !is_space(line[i])) ++i;
        } else {
            while (i < line.size() && !is_space(line[i])) ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

std::size_t parse_count(const Token& tok, std::size_t line_no) {
    if (tok.text.empty() || tok.text.size() > 9)
        throw ParseError("expected a dimension, got '" + std::string(tok.text) + "'", line_no, tok.column);
    std::size_t v = 0;
    for (std::size_t i = 0; i < tok.text.size(); ++i) {
        const char c = tok.text[i];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("expected a dimension, got '" + std::string(tok.text) + "'", line_no, tok.column + i);
        v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
}

template <EuclideanDomain T>
T parse_scalar(const Token& tok, std::size_t line_no) {
    const bool bracketed = tok.text.front() == '[';
    const bool want_poly = RingTraits<T>::name() == "polyq";
    if (bracketed != want_poly)
        throw ParseError(std::string(bracketed ? "polynomial" : "integer") + " literal '" + std::string(tok.text) +
                             "' in a " + std::string(RingTraits<T>::name()) + " matrix",
                         line_no, tok.column);
    try {
        return RingTraits<T>::parse(tok.text);
    } catch (const ParseError& e) {
        const std::string msg = e.what();
        throw ParseError(msg, line_no, tok.column + (e.column() == 0 ? 0 : e.column() - 1));
    }
}

} // namespace

template <EuclideanDomain T>
Matrix<T> parse_matrix(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    std::size_t rows = 0, cols = 0;
    std::vector<T> entries;
    std::size_t rows_read = 0;

    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        const std::size_t first = line.find_first_not_of(" \t\v\f");
        if (first == std::string_view::npos || line[first] == '#') continue;

        const auto tokens = tokenize(line, line_no);
        if (!have_header) {
            if (tokens.size() != 2)
                throw ParseError("header must be '<rows> <cols>'", line_no, tokens.size() > 2 ? tokens[2].column : 1);
            rows = parse_count(tokens[0], line_no);
            cols = parse_count(tokens[1], line_no);
            entries.reserve(rows * cols);
            have_header = true;
            continue;
        }
        if (rows_read == rows || cols == 0) throw ParseError("unexpected extra row", line_no, first + 1);
        if (tokens.size() != cols) {
            const std::size_t col = tokens.size() > cols ? tokens[cols].column : line.size() + 1;
            throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()),
                             line_no, col);
        }
        for (const auto& tok : tokens) entries.push_back(parse_scalar<T>(tok, line_no));
        ++rows_read;
    }
    if (!have_header) throw ParseError("missing '<rows> <cols>' header", line_no, 1);
    if (cols != 0 && rows_read != rows)
        throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(rows_read), line_no, 1);
    return Matrix<T>(rows, cols, std::move(entries));
}

template <EuclideanDomain T>
Matrix<T> read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix<T>(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

template <EuclideanDomain T>
std::string format_matrix(const Matrix<T>& m) {
    std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
    if (m.cols() == 0) return out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += RingTraits<T>::format(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <EuclideanDomain T>
nlohmann::json matrix_to_json(const Matrix<T>& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(RingTraits<T>::format(m(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

template Matrix<Integer> parse_matrix(std::string_view);
template Matrix<PolyQ> parse_matrix(std::string_view);
template Matrix<Integer> read_matrix_file(const std::string&);
template Matrix<PolyQ> read_matrix_file(const std::string&);
template std::string format_matrix(const Matrix<Integer>&);
template std::string format_matrix(const Matrix<PolyQ>&);
template nlohmann::json matrix_to_json(const Matrix<Integer>&);
template nlohmann::json matrix_to_json(const Matrix<PolyQ>&);

} // namespace matdiv
