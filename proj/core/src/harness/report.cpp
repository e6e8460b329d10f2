#include "levelga/harness/report.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace levelga::harness {

namespace {

constexpr const char* kHeader =
    "family,n,lambda,k_or_mu_or_eta,p_m,p_c,trials,censored,mean_T,median_T,ci_lo,ci_hi";

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw std::invalid_argument("result table: bad number '" + s + "'");
    return v;
}

std::size_t parse_size(const std::string& s) {
    return static_cast<std::size_t>(std::strtoull(s.c_str(), nullptr, 10));
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string to_csv(const ExperimentResult& result) {
    std::string out = kHeader;
    out += "\n";
    for (const SizeStats& row : result.rows) {
        out += row.family;
        out += "," + std::to_string(row.n);
        out += "," + std::to_string(row.lambda);
        out += "," + format_double(row.sel_param);
        out += "," + format_double(row.pm);
        out += "," + format_double(row.pc);
        out += "," + std::to_string(row.trials);
        out += "," + std::to_string(row.censored);
        out += "," + format_double(row.mean_t);
        out += "," + format_double(row.median_t);
        out += "," + format_double(row.ci_lo);
        out += "," + format_double(row.ci_hi);
        out += "\n";
    }
    return out;
}

std::string to_trials_csv(const ExperimentResult& result) {
    std::string out = "family,n,trial,T,censored\n";
    for (const SizeStats& row : result.rows) {
        for (std::size_t t = 0; t < row.raw.size(); ++t) {
            out += row.family;
            out += "," + std::to_string(row.n);
            out += "," + std::to_string(t);
            out += "," + format_double(row.raw[t]);
            out += ",";
            out += row.censored_flags[t] ? '1' : '0';
            out += "\n";
        }
    }
    return out;
}

std::string to_json(const ExperimentResult& result, const std::optional<ScalingFit>& fit) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const SizeStats& row : result.rows) {
        nlohmann::json r;
        r["family"] = row.family;
        r["size"] = row.size;
        r["n"] = row.n;
        r["lambda"] = row.lambda;
        r["k_or_mu_or_eta"] = row.sel_param;
        r["p_m"] = row.pm;
        r["p_c"] = row.pc;
        r["trials"] = row.trials;
        r["censored"] = row.censored;
        r["mean_T"] = row.mean_t;
        r["median_T"] = row.median_t;
        r["ci_lo"] = row.ci_lo;
        r["ci_hi"] = row.ci_hi;
        r["ci_degenerate"] = row.ci_degenerate;
        r["T"] = row.raw;
        r["censored_flags"] = row.censored_flags;
        doc["rows"].push_back(std::move(r));
    }
    if (fit) {
        doc["fit"] = {{"slope", fit->slope},
                      {"slope_stderr", fit->slope_stderr},
                      {"intercept", fit->intercept},
                      {"nlnln_constant", fit->nlnln_constant},
                      {"nlnln_valid", fit->nlnln_valid}};
    }
    return doc.dump(2) + "\n";
}

ExperimentResult parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kHeader)
        throw std::invalid_argument("result table: unexpected header");
    ExperimentResult result;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = split(line, ',');
        if (f.size() != 12) throw std::invalid_argument("result table: bad row '" + line + "'");
        SizeStats row;
        row.family = f[0];
        row.n = parse_size(f[1]);
        row.size = row.n;
        row.lambda = parse_size(f[2]);
        row.sel_param = parse_double(f[3]);
        row.pm = parse_double(f[4]);
        row.pc = parse_double(f[5]);
        row.trials = parse_size(f[6]);
        row.censored = parse_size(f[7]);
        row.mean_t = parse_double(f[8]);
        row.median_t = parse_double(f[9]);
        row.ci_lo = parse_double(f[10]);
        row.ci_hi = parse_double(f[11]);
        result.rows.push_back(std::move(row));
    }
    return result;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace levelga::harness
