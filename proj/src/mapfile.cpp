#include "qhm/mapfile.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

namespace qhm {
namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

int parse_positive_int(const std::string& tok, const char* what) {
    try {
        size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("map file: invalid ") + what + " '" + tok + "'");
    }
}

double parse_float_token(const std::string& tok) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + tok.size())
        throw ParseError("map file: invalid entry '" + tok + "'");
    if (!std::isfinite(v))
        throw ParseError("map file: non-finite entry '" + tok + "'");
    return v;
}

} // namespace

QuadraticMap read_map(std::istream& in) {
    const std::vector<std::string> tokens = tokenize(in);
    if (tokens.size() < 3)
        throw ParseError("map file: missing 'qhm <m> <n>' header");
    if (tokens[0] != "qhm")
        throw ParseError("map file: expected header word 'qhm', got '" + tokens[0] + "'");
    const int m = parse_positive_int(tokens[1], "domain dimension");
    const int n = parse_positive_int(tokens[2], "component count");
    const size_t expected = static_cast<size_t>(n) * m * m;
    const size_t have = tokens.size() - 3;
    if (have < expected)
        throw ParseError("map file: expected " + std::to_string(expected) + " entries, found " +
                         std::to_string(have));
    if (have > expected)
        throw ParseError("map file: trailing data after " + std::to_string(expected) + " entries");

    bool all_rational = true;
    std::vector<Rational> exact_entries;
    exact_entries.reserve(expected);
    for (size_t i = 3; i < tokens.size() && all_rational; ++i) {
        const auto r = Rational::parse(tokens[i]);
        if (r)
            exact_entries.push_back(*r);
        else
            all_rational = false;
    }

    try {
        if (all_rational) {
            std::vector<Mat<Rational>> comps;
            comps.reserve(static_cast<size_t>(n));
            size_t pos = 0;
            for (int c = 0; c < n; ++c) {
                Mat<Rational> a(m, m);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < m; ++j) a(i, j) = exact_entries[pos++];
                comps.push_back(std::move(a));
            }
            return QuadraticMap::from_exact(std::move(comps));
        }
        std::vector<Mat<double>> comps;
        comps.reserve(static_cast<size_t>(n));
        size_t pos = 3;
        for (int c = 0; c < n; ++c) {
            Mat<double> a(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const std::string& tok = tokens[pos++];
                    const auto r = Rational::parse(tok);
                    a(i, j) = r ? r->to_double() : parse_float_token(tok);
                }
            comps.push_back(std::move(a));
        }
        return QuadraticMap::from_fp(std::move(comps));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        // Symmetry / dimension problems in the file content are format errors.
        throw ParseError(std::string("map file: ") + e.what());
    }
}

QuadraticMap read_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("map file: cannot open '" + path + "'");
    return read_map(in);
}

QuadraticMap parse_map(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_map(in);
}

void write_map(std::ostream& out, const QuadraticMap& map) {
    out << "qhm " << map.m() << ' ' << map.n() << '\n';
    char buf[40];
    for (int c = 0; c < map.n(); ++c) {
        out << '\n';
        for (int i = 0; i < map.m(); ++i) {
            for (int j = 0; j < map.m(); ++j) {
                if (j) out << ' ';
                if (map.mode() == Mode::exact) {
                    out << map.components_exact()[static_cast<size_t>(c)](i, j).str();
                } else {
                    std::snprintf(buf, sizeof buf, "%.17g",
                                  map.components_fp()[static_cast<size_t>(c)](i, j));
                    out << buf;
                }
            }
            out << '\n';
        }
    }
}

std::string format_map(const QuadraticMap& map) {
    std::ostringstream out;
    write_map(out, map);
    return out.str();
}

} // namespace qhm
