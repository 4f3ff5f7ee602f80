#include "egan/io.hpp"

#include "egan/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

namespace egan {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

Json vertices_to_json(const std::vector<Vec>& vs) {
    Json rows = Json::array();
    for (const Vec& v : vs) {
        Json row = Json::array();
        for (double x : v) row.push_back(x);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<Vec> vertices_from_json(const Json& j) {
    if (!j.is_array() || j.empty())
        throw InvalidArgument("simplex file: \"vertices\" must be a nonempty array");
    std::vector<Vec> vs;
    vs.reserve(j.size());
    for (const Json& row : j) {
        if (!row.is_array() || row.empty())
            throw InvalidArgument("simplex file: each vertex must be a nonempty array of numbers");
        Vec v(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!row[i].is_number())
                throw InvalidArgument("simplex file: vertex entries must be numbers");
            v[i] = row[i].get<double>();
        }
        vs.push_back(std::move(v));
    }
    return vs;
}

void require_schema(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("dim") || !j.contains("vertices"))
        throw InvalidArgument("simplex file: expected {\"kind\", \"dim\", \"vertices\"}");
    if (!j["kind"].is_string())
        throw InvalidArgument("simplex file: \"kind\" must be a string");
    if (!j["dim"].is_number_integer())
        throw InvalidArgument("simplex file: \"dim\" must be an integer");
}

void require_dim(const Json& j, std::size_t expected_vertices, std::size_t coord_dim) {
    const auto dim = j["dim"].get<std::int64_t>();
    if (dim < 0 || static_cast<std::size_t>(dim) != coord_dim)
        throw InvalidArgument("simplex file: \"dim\" does not match the vertex coordinates");
    if (j["vertices"].size() != expected_vertices)
        throw InvalidArgument("simplex file: wrong vertex count for \"dim\"");
}

} // namespace

Json to_json(const EuclideanSimplex& s) {
    Json j;
    j["kind"] = "euclidean";
    j["dim"] = s.dim();
    j["vertices"] = vertices_to_json(s.vertices());
    return j;
}

Json to_json(const SphericalSimplex& s) {
    Json j;
    j["kind"] = "spherical";
    j["dim"] = s.m();
    j["vertices"] = vertices_to_json(s.vertices());
    return j;
}

EuclideanSimplex euclidean_from_json(const Json& j) {
    require_schema(j);
    if (j["kind"].get<std::string>() != "euclidean")
        throw InvalidArgument("simplex file: expected kind \"euclidean\"");
    std::vector<Vec> vs = vertices_from_json(j["vertices"]);
    require_dim(j, vs[0].dim() + 1, vs[0].dim());
    return EuclideanSimplex(std::move(vs));
}

SphericalSimplex spherical_from_json(const Json& j) {
    require_schema(j);
    if (j["kind"].get<std::string>() != "spherical")
        throw InvalidArgument("simplex file: expected kind \"spherical\"");
    std::vector<Vec> vs = vertices_from_json(j["vertices"]);
    require_dim(j, vs[0].dim(), vs[0].dim());
    return SphericalSimplex(std::move(vs));
}

std::variant<EuclideanSimplex, SphericalSimplex> simplex_from_json(const Json& j) {
    require_schema(j);
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "euclidean") return euclidean_from_json(j);
    if (kind == "spherical") return spherical_from_json(j);
    throw InvalidArgument("simplex file: unknown kind \"" + kind + "\"");
}

std::variant<EuclideanSimplex, SphericalSimplex> load_simplex_file(const std::string& path) {
    return simplex_from_json(load_json_file(path));
}

Json to_json(const EganReport& r) {
    Json j;
    j["dim"] = r.dim;
    j["R"] = r.R;
    j["r"] = r.r;
    j["d_centers"] = r.d_centers;
    j["slack"] = r.slack;
    j["near_degenerate"] = r.near_degenerate;
    return j;
}

Json to_json(const CertificateReport& r) {
    Json j;
    j["m"] = r.m;
    j["alpha"] = r.alpha;
    j["beta"] = r.beta;
    j["gamma"] = r.gamma;
    j["b"] = r.b;
    j["c"] = r.c;
    j["K"] = r.K;
    j["L"] = r.L;
    j["margin"] = r.margin;
    j["trace_JD"] = r.trace_JD;
    j["max_offdiag_UtV"] = r.max_offdiag_UtV;
    j["max_diag_JB2U"] = r.max_diag_JB2U;
    j["max_diag_JC2V"] = r.max_diag_JC2V;
    j["semispace_ok"] = r.semispace_ok;
    return j;
}

Json to_json(const TrialConfig& cfg) {
    Json j;
    j["dim"] = cfg.dim;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["generator"] = generator_name(cfg.generator);
    j["rtol"] = cfg.rtol;
    j["perturbation"] = cfg.perturbation;
    return j;
}

Json to_json(const ScanReport& r) {
    Json j;
    j["config"] = to_json(r.config);
    j["trials_run"] = r.trials_run;
    j["violations"] = r.violations;
    j["min_slack"] = r.min_slack;
    j["min_slack_normalized"] = r.min_slack_normalized;
    j["argmin_index"] = r.argmin_index;
    if (r.argmin) j["argmin"] = to_json(*r.argmin);
    return j;
}

Json to_json(const SearchResult& r) {
    Json j;
    j["best"] = to_json(r.best);
    j["best_slack"] = r.best_slack;
    j["iterations_run"] = r.iterations_run;
    Json trace = Json::array();
    for (double v : r.trace) trace.push_back(v);
    j["trace"] = std::move(trace);
    return j;
}

Json to_json(const ConvergenceTable& t) {
    Json j;
    j["dim"] = t.dim;
    j["limit_R"] = t.limit_R;
    j["limit_r"] = t.limit_r;
    j["limit_d"] = t.limit_d;
    j["euclid_slack"] = t.euclid_slack;
    Json rows = Json::array();
    for (const EmbeddingRow& row : t.rows) {
        Json rj;
        rj["H"] = row.H;
        rj["beta_H"] = row.beta_H;
        rj["Gamma_H"] = row.Gamma_H;
        rj["alpha_H"] = row.alpha_H;
        rj["scaled_R"] = row.scaled_R;
        rj["scaled_r"] = row.scaled_r;
        rj["scaled_d"] = row.scaled_d;
        rj["spherical_slack"] = row.spherical_slack;
        rj["scaled_slack"] = scaled_slack(row, t.dim);
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

SphericalReport spherical_report(const SphericalSimplex& s, double rtol) {
    const SphericalCap circ = circum_cap(s);
    const SphericalCap insc = inscribed_cap(s);
    SphericalReport rep;
    rep.m = s.m();
    rep.beta = circ.angular_radius;
    rep.Gamma = insc.angular_radius;
    rep.alpha = unit_angle(circ.center, insc.center);
    rep.R = std::tan(rep.beta);
    rep.r = std::tan(rep.Gamma);
    rep.d = std::tan(rep.alpha);
    rep.slack = spherical_gd_slack(s);
    rep.equality_case = std::abs(rep.slack) <= rtol * std::max(1.0, rep.R * rep.R);
    if (s.m() == 3) {
        rep.euler_residual = spherical_euler_residual(s);
        rep.has_euler_residual = true;
    }
    return rep;
}

Json to_json(const SphericalReport& r) {
    Json j;
    j["m"] = r.m;
    j["beta"] = r.beta;
    j["Gamma"] = r.Gamma;
    j["alpha"] = r.alpha;
    j["R"] = r.R;
    j["r"] = r.r;
    j["d"] = r.d;
    j["slack"] = r.slack;
    j["equality_case"] = r.equality_case;
    if (r.has_euler_residual) j["euler_residual"] = r.euler_residual;
    return j;
}

std::string to_csv(const ConvergenceTable& t) {
    std::ostringstream out;
    out << "H,beta_H,Gamma_H,alpha_H,scaled_R,scaled_r,scaled_d,spherical_slack,euclid_slack\n";
    for (const EmbeddingRow& row : t.rows) {
        out << format_double(row.H) << ',' << format_double(row.beta_H) << ','
            << format_double(row.Gamma_H) << ',' << format_double(row.alpha_H) << ','
            << format_double(row.scaled_R) << ',' << format_double(row.scaled_r) << ','
            << format_double(row.scaled_d) << ',' << format_double(row.spherical_slack) << ','
            << format_double(scaled_slack(row, t.dim)) << '\n';
    }
    return out.str();
}

std::string trace_csv(const SearchResult& r) {
    std::ostringstream out;
    out << "iteration,best_slack\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i)
        out << i << ',' << format_double(r.trace[i]) << '\n';
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidArgument("cannot open file for writing: " + path);
    out << content;
    if (!out) throw InvalidArgument("write failed: " + path);
}

Json load_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidArgument("not valid JSON: " + path);
    return j;
}

} // namespace egan
