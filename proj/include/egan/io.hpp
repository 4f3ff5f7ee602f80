#pragma once

#include "egan/certificate.hpp"
#include "egan/euclid.hpp"
#include "egan/limit.hpp"
#include "egan/scan.hpp"
#include "egan/search.hpp"
#include "egan/spherical.hpp"

#include <json.hpp>

#include <string>
#include <variant>

// Serialization: JSON for simplices and reports, CSV for tables.  Output is
// deterministic byte-for-byte — doubles print shortest-round-trip in JSON
// and with 17 significant digits in CSV, always with '.' as the decimal
// separator regardless of locale.

namespace egan {

using Json = nlohmann::ordered_json; // insertion-ordered keys, stable output

std::string format_double(double v); // %.17g equivalent, locale-independent

// Simplex files: {"kind": "euclidean"|"spherical", "dim": n, "vertices": [[..], ..]}.
// For spherical simplices dim is the ambient dimension m.
Json to_json(const EuclideanSimplex& s);
Json to_json(const SphericalSimplex& s);
EuclideanSimplex euclidean_from_json(const Json& j);
SphericalSimplex spherical_from_json(const Json& j);
std::variant<EuclideanSimplex, SphericalSimplex> simplex_from_json(const Json& j);
std::variant<EuclideanSimplex, SphericalSimplex> load_simplex_file(const std::string& path);

Json to_json(const EganReport& r);
Json to_json(const CertificateReport& r);
Json to_json(const TrialConfig& cfg);
Json to_json(const ScanReport& r); // elapsed intentionally omitted
Json to_json(const SearchResult& r);
Json to_json(const ConvergenceTable& t);

// Spherical analogue of EganReport, assembled from the public cap API:
// R = tan beta, r = tan Gamma, d = tan alpha, n = m - 1.
struct SphericalReport {
    int m = 0;
    double beta = 0.0;  // circumscribed cap radius (angle)
    double Gamma = 0.0; // inscribed cap radius (angle)
    double alpha = 0.0; // distance between cap centers (angle)
    double R = 0.0;
    double r = 0.0;
    double d = 0.0;
    double slack = 0.0;
    bool equality_case = false;    // |slack| within tolerance of zero
    double euler_residual = 0.0;   // m = 3 only
    bool has_euler_residual = false;
};

SphericalReport spherical_report(const SphericalSimplex& s, double rtol = kDefaultRtol);
Json to_json(const SphericalReport& r);

// Header: H,beta_H,Gamma_H,alpha_H,scaled_R,scaled_r,scaled_d,spherical_slack,euclid_slack
// where euclid_slack is the slack of the scaled metrics (converges to the
// Euclidean slack) and spherical_slack the raw tan-metric value.
std::string to_csv(const ConvergenceTable& t);

// Header: iteration,best_slack (the nonincreasing best-so-far trace).
std::string trace_csv(const SearchResult& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Json load_json_file(const std::string& path);

} // namespace egan
