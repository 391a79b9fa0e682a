#pragma once

// CGF: plain-text storage of a colored graph, one involution per color.
//
//   cgf 1
//   dim <d>
//   vertices <nu>
//   color 0: <partner of 0> <partner of 1> ... <partner of nu-1>
//   ...
//   color d: ...
//
// Single spaces, newline-terminated lines, colors in ascending order. Lines
// starting with '#' are comments. Blank lines separate graphs in a stream.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "crystal/colored_graph.hpp"
#include "crystal/error.hpp"

namespace crystal {

inline std::string to_cgf(const ColoredGraph& graph)
{
    std::string out = "cgf 1\ndim " + std::to_string(graph.dim()) + "\nvertices " +
                      std::to_string(graph.num_vertices()) + "\n";
    for (Color c = 0; c <= graph.dim(); ++c) {
        out += "color " + std::to_string(c) + ":";
        for (Vertex w : graph.matching(c)) {
            out += ' ';
            out += std::to_string(w);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

struct CgfLine {
    std::size_t number;
    std::string_view text;
};

[[noreturn]] inline void cgf_fail(std::size_t line, const std::string& what)
{
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename Int>
Int parse_int(std::string_view token, std::size_t line)
{
    Int value{};
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        cgf_fail(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

inline std::vector<std::string_view> split_single_spaces(std::string_view text, std::size_t line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(' ', start);
        auto token = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        if (token.empty()) {
            cgf_fail(line, "tokens must be separated by single spaces");
        }
        out.push_back(token);
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return out;
}

inline std::string_view expect_keyword(const CgfLine& line, std::string_view keyword)
{
    auto tokens = split_single_spaces(line.text, line.number);
    if (tokens.size() != 2 || tokens[0] != keyword) {
        cgf_fail(line.number, "expected '" + std::string(keyword) + " <value>'");
    }
    return tokens[1];
}

inline ColoredGraph parse_cgf_lines(const std::vector<CgfLine>& lines)
{
    if (lines.empty()) {
        cgf_fail(0, "empty input");
    }
    std::size_t i = 0;
    auto next = [&]() -> const CgfLine& {
        if (i >= lines.size()) {
            cgf_fail(lines.back().number, "unexpected end of input");
        }
        return lines[i++];
    };

    const auto& header = next();
    if (header.text != "cgf 1") {
        cgf_fail(header.number, "expected header 'cgf 1'");
    }
    const auto& dim_line = next();
    const int dim = parse_int<int>(expect_keyword(dim_line, "dim"), dim_line.number);
    if (dim < 2 || dim > kMaxDim) {
        cgf_fail(dim_line.number, "dimension out of range");
    }
    const auto& nu_line = next();
    const auto nu = parse_int<std::size_t>(expect_keyword(nu_line, "vertices"), nu_line.number);

    RawGraph raw{dim, nu, {}};
    for (Color c = 0; c <= dim; ++c) {
        const auto& line = next();
        const std::string prefix = "color " + std::to_string(c) + ":";
        if (line.text.substr(0, prefix.size()) != prefix) {
            cgf_fail(line.number, "expected '" + prefix + "'");
        }
        auto rest = line.text.substr(prefix.size());
        std::vector<Vertex> m;
        if (!rest.empty()) {
            if (rest.front() != ' ') {
                cgf_fail(line.number, "expected a space after '" + prefix + "'");
            }
            for (auto token : split_single_spaces(rest.substr(1), line.number)) {
                m.push_back(parse_int<Vertex>(token, line.number));
            }
        }
        if (m.size() != nu) {
            cgf_fail(line.number, "color " + std::to_string(c) + " has " + std::to_string(m.size()) +
                                      " entries, expected " + std::to_string(nu));
        }
        raw.matchings.push_back(std::move(m));
    }
    if (i != lines.size()) {
        cgf_fail(lines[i].number, "trailing content after the last color line");
    }
    return validate(std::move(raw));
}

/// Splits text into blocks of meaningful lines separated by blank lines.
inline std::vector<std::vector<CgfLine>> cgf_blocks(std::string_view text)
{
    std::vector<std::vector<CgfLine>> blocks(1);
    std::size_t number = 0;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            cgf_fail(number + 1, "missing final newline");
        }
        auto line = text.substr(start, end - start);
        ++number;
        start = end + 1;
        if (!line.empty() && line.front() == '#') {
            continue;
        }
        if (line.empty()) {
            if (!blocks.back().empty()) {
                blocks.emplace_back();
            }
            continue;
        }
        blocks.back().push_back({number, line});
    }
    if (blocks.back().empty()) {
        blocks.pop_back();
    }
    return blocks;
}

} // namespace detail

/// Parses exactly one graph.
inline ColoredGraph parse_cgf(std::string_view text)
{
    auto blocks = detail::cgf_blocks(text);
    if (blocks.empty()) {
        detail::cgf_fail(0, "no graph found");
    }
    if (blocks.size() > 1) {
        detail::cgf_fail(blocks[1].front().number, "more than one graph in input");
    }
    return detail::parse_cgf_lines(blocks.front());
}

/// Parses a blank-line separated sequence of graphs.
inline std::vector<ColoredGraph> parse_cgf_stream(std::string_view text)
{
    std::vector<ColoredGraph> out;
    for (const auto& block : detail::cgf_blocks(text)) {
        out.push_back(detail::parse_cgf_lines(block));
    }
    return out;
}

inline std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline ColoredGraph load_cgf(const std::string& path)
{
    return parse_cgf(read_text_file(path));
}

} // namespace crystal
