#pragma once

// Fixtures and utilities shared by the test binaries.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qhm/core.hpp"
#include "qhm/sampling.hpp"

namespace qhm_test {

inline void set_sym(qhm::Mat<qhm::Rational>& a, int i, int j, long v) {
    a(i, j) = qhm::Rational(v);
    a(j, i) = qhm::Rational(v);
}

inline qhm::Mat<qhm::Rational> rat_diag(const std::vector<long>& d) {
    const int n = static_cast<int>(d.size());
    qhm::Mat<qhm::Rational> a(n, n);
    for (int i = 0; i < n; ++i) a(i, i) = qhm::Rational(d[static_cast<size_t>(i)]);
    return a;
}

inline qhm::Mat<qhm::Rational> rat_mat(const std::vector<std::vector<long>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    qhm::Mat<qhm::Rational> a(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            a(i, j) = qhm::Rational(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return a;
}

inline qhm::Mat<double> fp_mat(const std::vector<std::vector<double>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
    qhm::Mat<double> a(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            a(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return a;
}

// R^8 -> R^3 harmonic morphism whose components all have eigenvalues
// {2, 2, 3, 3, -2, -2, -3, -3}: Q-rank 8, two distinct positive eigenvalues,
// so not umbilical.
inline qhm::QuadraticMap two_eigenvalue_morphism() {
    qhm::Mat<qhm::Rational> a1 = rat_diag({2, 2, 3, 3, -2, -2, -3, -3});
    qhm::Mat<qhm::Rational> a2(8, 8);
    set_sym(a2, 0, 4, 2);
    set_sym(a2, 1, 5, 2);
    set_sym(a2, 2, 7, 3);
    set_sym(a2, 3, 6, -3);
    qhm::Mat<qhm::Rational> a3(8, 8);
    set_sym(a3, 0, 5, -2);
    set_sym(a3, 1, 4, 2);
    set_sym(a3, 2, 6, 3);
    set_sym(a3, 3, 7, 3);
    return qhm::QuadraticMap::from_exact({a1, a2, a3});
}

// R^8 -> R^5 umbilical harmonic morphism with every positive eigenvalue
// equal to 3 (a scaled quaternionic Hopf construction in paired coordinates).
inline qhm::QuadraticMap umbilical_scale3_morphism() {
    qhm::Mat<qhm::Rational> a1 = rat_diag({3, 3, 3, 3, -3, -3, -3, -3});
    qhm::Mat<qhm::Rational> a2(8, 8);
    set_sym(a2, 0, 4, 3);
    set_sym(a2, 1, 5, -3);
    set_sym(a2, 2, 6, -3);
    set_sym(a2, 3, 7, -3);
    qhm::Mat<qhm::Rational> a3(8, 8);
    set_sym(a3, 0, 5, 3);
    set_sym(a3, 1, 4, 3);
    set_sym(a3, 2, 7, 3);
    set_sym(a3, 3, 6, -3);
    qhm::Mat<qhm::Rational> a4(8, 8);
    set_sym(a4, 0, 6, 3);
    set_sym(a4, 1, 7, -3);
    set_sym(a4, 2, 4, 3);
    set_sym(a4, 3, 5, 3);
    qhm::Mat<qhm::Rational> a5(8, 8);
    set_sym(a5, 0, 7, 3);
    set_sym(a5, 1, 6, 3);
    set_sym(a5, 2, 5, -3);
    set_sym(a5, 3, 4, 3);
    return qhm::QuadraticMap::from_exact({a1, a2, a3, a4, a5});
}

// x -> phi(Q x) for a random orthogonal Q, i.e. components Q^T A_i Q.
// Preserves the harmonic morphism property and all spectra.
inline qhm::QuadraticMap conjugated_copy(const qhm::QuadraticMap& map, qhm::Rng& rng) {
    const qhm::Mat<double> q = rng.orthogonal(map.m());
    const qhm::Mat<double> qt = q.transpose();
    std::vector<qhm::Mat<double>> out;
    out.reserve(static_cast<size_t>(map.n()));
    for (const qhm::Mat<double>& a : qhm::fp_components(map)) out.push_back(qt * a * q);
    return qhm::QuadraticMap::from_fp(std::move(out));
}

inline std::filesystem::path temp_path(const std::string& stem, const std::string& ext = "") {
    static int counter = 0;
    return std::filesystem::temp_directory_path() /
           (stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ext);
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr combined
};

// Runs the pinned CLI binary through /bin/sh. env_prefix may carry
// VAR=value assignments placed before the command.
inline CliResult run_cli(const std::string& args, const std::string& stdin_text = "",
                         const std::string& env_prefix = "") {
    std::string cmd = env_prefix.empty() ? std::string() : env_prefix + " ";
    cmd += std::string("\"") + QHM_CLI_PATH + "\" " + args;
    std::filesystem::path in_path;
    if (!stdin_text.empty()) {
        in_path = temp_path("qhm_stdin", ".txt");
        write_file(in_path, stdin_text);
        cmd += " < \"" + in_path.string() + "\"";
    } else {
        cmd += " < /dev/null";
    }
    cmd += " 2>&1";

    CliResult res;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return res;
    char buf[4096];
    size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    const int status = ::pclose(pipe);
    if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
    if (!in_path.empty()) std::filesystem::remove(in_path);
    return res;
}

} // namespace qhm_test
