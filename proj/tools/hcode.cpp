// Copyright 2026 The hcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hcode: command-line front end. Every subcommand prints a JSON report on stdout except
// `admissible` (CSV table) and `codeword` (codeword text format); `--json PATH` also writes the
// report to a file. Exit codes: 0 success, 1 failed check or runtime error, 2 usage error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcode/admissibility.hpp"
#include "hcode/code_metrics.hpp"
#include "hcode/entanglement.hpp"
#include "hcode/report.hpp"
#include "hcode/spectra.hpp"
#include "hcode/verification.hpp"

namespace {

using hcode::Report;
using json = nlohmann::ordered_json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Thrown for bad flag values that CLI11 cannot validate on its own.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct LatticeFlags {
  std::vector<std::size_t> torus;
  std::vector<std::size_t> patch;

  void add_to(CLI::App* cmd) {
    auto* t = cmd->add_option("--torus", torus, "periodic lattice: N (boundary length) and M (rows)")->expected(2);
    auto* p = cmd->add_option("--patch", patch, "open lattice: N and M")->expected(2);
    t->excludes(p);
  }

  std::optional<hcode::Lattice> get() const {
    if (!torus.empty()) return hcode::Lattice::torus(torus[0], torus[1]);
    if (!patch.empty()) return hcode::Lattice::patch(patch[0], patch[1]);
    return std::nullopt;
  }

  hcode::Lattice require() const {
    auto l = get();
    if (!l) throw UsageError("one of --torus N M or --patch N M is required");
    return *l;
  }
};

json lattice_json(const hcode::Lattice& l) { return {{"kind", l.kind_name()}, {"n", l.n()}, {"m", l.m()}}; }

json sites_json(const hcode::Region& r) { return json(r.sites()); }

std::size_t parse_size(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw UsageError(std::string("bad ") + what + ": '" + s + "'");
  return static_cast<std::size_t>(v);
}

/// "a..b" or "a".
std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = parse_size(s, "--n");
    return {v, v};
  }
  return {parse_size(s.substr(0, dots), "--n"), parse_size(s.substr(dots + 2), "--n")};
}

std::vector<hcode::SiteId> parse_site_list(const std::string& s) {
  std::vector<hcode::SiteId> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_size(item, "site id"));
  return out;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_json_file(const Report& r, const std::string& path) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << r.to_json().dump(2) << "\n";
}

int finish(const Report& r, const std::string& json_path, bool print) {
  if (print) std::cout << r.to_json().dump(2) << "\n";
  write_json_file(r, json_path);
  return r.pass() ? 0 : kExitCheckFailed;
}

std::optional<std::size_t> power_of_three_exponent(std::size_t n) {
  std::size_t k = 0;
  while (n > 1 && n % 3 == 0) {
    n /= 3;
    ++k;
  }
  if (n != 1 || k == 0) return std::nullopt;
  return k;
}

// ---- admissible ------------------------------------------------------------------------------

struct AdmissibleArgs {
  std::string n;
  std::uint64_t m_max = 1000;
};

int run_admissible(const AdmissibleArgs& a, unsigned workers, const std::string& json_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto [lo, hi] = parse_range(a.n);
  const auto table = hcode::search_admissible(lo, hi, a.m_max, workers);

  std::cout << "n,minimal_m,admissible_examples\n";
  Report r;
  r.command = "admissible";
  r.inputs = {{"n_min", lo}, {"n_max", hi}, {"m_max", a.m_max}};
  json rows = json::array();
  for (const auto& e : table) {
    std::string examples;
    for (std::uint64_t m : e.admissible_examples) examples += (examples.empty() ? "" : " ") + std::to_string(m);
    const std::string min_m = e.minimal_m ? std::to_string(*e.minimal_m) : (e.singular ? "singular" : "none");
    std::cout << e.n << "," << min_m << "," << examples << "\n";
    rows.push_back({{"n", e.n},
                    {"minimal_m", e.minimal_m ? json(*e.minimal_m) : json(nullptr)},
                    {"singular", e.singular},
                    {"admissible_examples", e.admissible_examples}});
  }
  r.results["table"] = rows;

  const std::vector<std::pair<std::size_t, std::uint64_t>> listed{{3, 3}, {9, 9}, {27, 27}, {5, 40}, {7, 182}, {11, 121}};
  for (auto [n, m] : listed) {
    if (n < lo || n > hi) continue;
    const bool ok = hcode::is_admissible(n, m);
    r.checks.push_back(hcode::make_check("admissible(" + std::to_string(n) + "," + std::to_string(m) + ")", true, ok, ok));
  }
  r.wall_time_s = seconds_since(t0);
  return finish(r, json_path, false);
}

// ---- verify-all ------------------------------------------------------------------------------

int run_verify_all(unsigned k, unsigned workers, const std::string& json_path) {
  if (k < 1 || k > hcode::kMaxVerifyK) {
    std::cerr << "verify-all: --k must be 1 or 2. k = 3 would need 3^27 codewords for the distance sweep and a "
                 "3^729-dimensional Hilbert space for the spectra; use `distance --torus 27 27` for a sampled "
                 "upper bound instead.\n";
    return kExitUsage;
  }
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "verify-all";
  r.inputs = {{"k", k}};
  hcode::VerifyOptions opt;
  opt.k = k;
  opt.workers = workers;
  json criteria = json::array();
  for (int id = 1; id <= hcode::kNumCriteria; ++id) {
    const hcode::CriterionResult c = hcode::run_criterion(id, opt);
    std::cerr << (c.pass() ? "[PASS] " : "[FAIL] ") << id << " " << c.title << "\n";
    criteria.push_back({{"id", id}, {"title", c.title}, {"pass", c.pass()}});
    for (hcode::Check ch : c.checks) {
      ch.name = std::to_string(id) + "." + ch.name;
      r.checks.push_back(std::move(ch));
    }
  }
  r.results["criteria"] = criteria;
  r.wall_time_s = seconds_since(t0);
  return finish(r, json_path, true);
}

// ---- codeword --------------------------------------------------------------------------------

int run_codeword(const hcode::Lattice& l, const std::string& boundary, const std::string& out_path,
                 const std::string& json_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const hcode::SpinConfig cw = hcode::generate_codeword(hcode::trits_from_digits(boundary), l);
  const std::string text = hcode::format_codeword(cw);
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
  }
  Report r;
  r.command = "codeword";
  r.inputs = {{"lattice", lattice_json(l)}, {"boundary", boundary}};
  r.results = {{"codeword", hcode::trits_to_digits(cw.values())},
               {"weight", hcode::weight(cw.values())},
               {"frustrated_triangles", cw.frustrated_triangles()}};
  r.checks.push_back(hcode::make_check("neutral", 0, cw.frustrated_triangles(), cw.is_neutral()));
  r.wall_time_s = seconds_since(t0);
  return finish(r, json_path, false);
}

// ---- distance --------------------------------------------------------------------------------

int run_distance(const hcode::Lattice& l, std::uint64_t samples, unsigned workers, const std::string& json_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const hcode::HCode code(l);
  Report r;
  r.command = "distance";
  r.inputs = {{"lattice", lattice_json(l)}, {"samples", samples}};
  r.results["n"] = l.n();
  r.results["m"] = l.m();

  const bool enumerable = l.n() <= hcode::kMaxEnumerableBoundary;
  const hcode::MinDistanceResult d = enumerable ? hcode::min_distance(code, workers) : hcode::sampled_min_weight(code, samples);
  r.results["min_distance"] = d.value;
  r.results["exact"] = d.exact;
  r.results["witness_boundary"] = hcode::trits_to_digits(d.witness_boundary);
  if (enumerable) {
    const hcode::SectorCensus census = hcode::sector_census(code, workers);
    r.results["sector_counts"] = census.counts;
    r.results["charge_constant"] = census.charge_constant;
    if (l.is_torus()) {
      const std::uint64_t each = code.size() / 3;
      const bool even = census.counts[0] == each && census.counts[1] == each && census.counts[2] == each;
      r.checks.push_back(hcode::make_check("sector_census", json::array({each, each, each}), census.counts, even));
      r.checks.push_back(hcode::make_check("charge_constant", true, census.charge_constant, census.charge_constant));
    }
  } else {
    r.results["sector_counts"] = nullptr;
    r.results["charge_constant"] = nullptr;
    r.checks.push_back(hcode::make_info("min_distance_upper_bound", d.value,
                                        "sampled: exhaustive sweep needs 3^" + std::to_string(l.n()) + " codewords"));
  }
  // On 3^k x 3^k tori the distance is 6^k.
  if (const auto k = power_of_three_exponent(l.n()); k && l.is_torus() && l.n() == l.m() && d.exact) {
    std::size_t want = 1;
    for (std::size_t i = 0; i < *k; ++i) want *= 6;
    r.checks.push_back(hcode::make_check("min_distance", want, d.value, d.value == want));
  }
  r.wall_time_s = seconds_since(t0);
  return finish(r, json_path, true);
}

// ---- entropy ---------------------------------------------------------------------------------

struct EntropyArgs {
  std::string region;
  std::optional<int> sector;
  std::string method = "rank";
};

hcode::Region parse_region(const std::string& spec, const hcode::Lattice& l) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "triangle" && arg.empty()) {
    const hcode::Triangle& t = l.up_triangles().at(0);
    return hcode::Region{t.left, t.right, t.apex};
  }
  if (kind == "all" && arg.empty()) return hcode::Region{}.complement(l);
  if (kind == "sites") return hcode::Region(parse_site_list(arg));
  if (kind == "row" || kind == "col") {
    const std::size_t idx = parse_size(arg, kind.c_str());
    std::vector<hcode::SiteId> sites;
    if (kind == "row") {
      if (idx >= l.m()) throw UsageError("row out of range");
      for (std::size_t c = 0; c < l.row_length(idx); ++c) sites.push_back(l.id(idx, c));
    } else {
      if (!l.is_torus()) throw UsageError("col: regions need a torus");
      if (idx >= l.n()) throw UsageError("col out of range");
      for (std::size_t r = 0; r < l.m(); ++r) sites.push_back(l.id(r, idx));
    }
    return hcode::Region(sites);
  }
  throw UsageError("unknown region spec '" + spec + "' (triangle, topo, all, sites:i,j,..., row:r, col:c)");
}

int run_entropy(const hcode::Lattice& l, const EntropyArgs& a, const std::string& json_path) {
  const auto t0 = std::chrono::steady_clock::now();
  if (a.method != "rank" && a.method != "brute-force") throw UsageError("--method must be rank or brute-force");
  const hcode::HCode code(l);
  std::optional<hcode::Trit> sector;
  if (a.sector) sector = hcode::Trit(*a.sector);
  Report r;
  r.command = "entropy";
  r.inputs = {{"lattice", lattice_json(l)},
              {"region", a.region},
              {"sector", a.sector ? json(*a.sector) : json(nullptr)},
              {"method", a.method}};

  if (a.region == "topo") {
    const hcode::Triangle& t = l.up_triangles().at(0);
    const hcode::Region ra{t.left}, rb{t.right}, rc{t.apex};
    const int s = hcode::topological_entropy(ra, rb, rc, code);
    r.results = {{"A", sites_json(ra)}, {"B", sites_json(rb)}, {"C", sites_json(rc)}, {"topological_entropy", s}};
    if (l.is_torus()) r.checks.push_back(hcode::make_check("topological_entropy", -1, s, s == -1));
  } else {
    const hcode::Region region = parse_region(a.region, l);
    if (!region.fits(l)) throw std::out_of_range("region has sites outside the lattice");
    const hcode::EntropyResult e =
        a.method == "rank" ? hcode::entropy(region, code, sector) : hcode::brute_force_entropy(region, code, sector);
    r.results["region"] = sites_json(region);
    if (a.method == "rank")
      r.results["entropy"] = e.exact();
    else
      r.results["entropy"] = e.entropy;
    r.results["method"] = hcode::to_string(e.method);
    if (a.region == "triangle" && l.is_torus())
      r.checks.push_back(hcode::make_check("triangle_entropy", 2, e.entropy, std::abs(e.entropy - 2.0) < 1e-9, 1e-9));
    if (region.size() == 1)
      r.checks.push_back(hcode::make_check("single_site_entropy", 1, e.entropy, std::abs(e.entropy - 1.0) < 1e-9, 1e-9));
  }
  r.wall_time_s = seconds_since(t0);
  return finish(r, json_path, true);
}

// ---- spectrum --------------------------------------------------------------------------------

struct SpectrumArgs {
  std::string op = "h";
  std::optional<int> sector;
  std::size_t boundary_length = 3;
};

/// Rounded to 1e-9 so that solver noise does not show up in reports.
double clean(double v) { return std::round(v * 1e9) / 1e9 + 0.0; }

json levels_json(const std::vector<hcode::Level>& levels) {
  json out = json::array();
  for (const auto& lv : levels) out.push_back({{"value", clean(lv.value)}, {"multiplicity", lv.multiplicity}});
  return out;
}

int run_spectrum(std::optional<hcode::Lattice> lat, const SpectrumArgs& a, const std::string& json_path) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = "spectrum";
  const bool boundary = a.op == "boundary";
  const hcode::Lattice l = lat.value_or(hcode::Lattice::torus(3, 3));
  if (!boundary && !(l.is_torus() && l.n() == 3 && l.m() == 3))
    throw UsageError("spectrum: lattice operators are only available on the 3x3 torus");
  r.inputs = {{"operator", a.op},
              {"sector", a.sector ? json(*a.sector) : json(nullptr)},
              {"lattice", boundary ? json(nullptr) : lattice_json(l)},
              {"boundary_length", boundary ? json(a.boundary_length) : json(nullptr)}};

  hcode::Operator h;
  if (a.op == "hz") h = hcode::build_HZ(l);
  else if (a.op == "hx") h = hcode::build_HX_3x3();
  else if (a.op == "hxp") h = hcode::build_HX_prime_3x3();
  else if (a.op == "h") h = hcode::build_HZ(l) + hcode::build_HX_3x3();
  else if (a.op == "hprime") h = hcode::build_HZ(l) + hcode::build_HX_prime_3x3();
  else if (boundary) h = hcode::build_boundary_hamiltonian(a.boundary_length);
  else throw UsageError("--operator must be one of hz, hx, hxp, h, hprime, boundary");

  r.results["operator"] = a.op;
  r.results["sector"] = a.sector ? json(*a.sector) : json(nullptr);
  const double herm = hcode::hermiticity_defect(h);
  r.checks.push_back(hcode::make_check("hermitian", 0.0, herm, herm < 1e-12, 1e-12));
  if (!boundary && a.op != "hz") {
    const double c = hcode::commutator_norm(hcode::build_HZ(l), h);
    r.checks.push_back(hcode::make_check("commutes_with_HZ", 0.0, c, c < 1e-9, 1e-9));
  }

  if (a.sector) {
    if (boundary) throw UsageError("--sector applies to the lattice operators only");
    const hcode::HCode code(l);
    const hcode::SectorSpectrum sp = hcode::sector_spectrum(h, code, hcode::Trit(*a.sector));
    r.results["eigenvalues"] = levels_json(sp.levels);
    r.results["ground_degeneracy"] = sp.levels.front().multiplicity;
    r.results["ground_energy"] = clean(sp.levels.front().value);
    r.results["uniform_ground_vector"] = hcode::uniform_amplitude(sp.ground_vector);
    if (a.op == "hx") {
      const std::vector<std::pair<double, std::size_t>> want{{-6.0, 1}, {0.0, 6}, {3.0, 2}};
      bool ok = sp.levels.size() == want.size();
      for (std::size_t i = 0; ok && i < want.size(); ++i)
        ok = std::abs(sp.levels[i].value - want[i].first) < 1e-9 && sp.levels[i].multiplicity == want[i].second;
      json expected = json::array();
      for (auto [v, m] : want) expected.push_back({{"value", v}, {"multiplicity", m}});
      r.checks.push_back(hcode::make_check("sector_levels", expected, levels_json(sp.levels), ok, 1e-9));
    }
  } else {
    const hcode::GroundSpace gs = hcode::ground_space(h);
    json ev = json::array();
    ev.push_back({{"value", clean(gs.energy)}, {"multiplicity", gs.degeneracy()}});
    r.results["eigenvalues"] = ev;
    r.results["ground_degeneracy"] = gs.degeneracy();
    r.results["ground_energy"] = clean(gs.energy);
    r.results["gap"] = std::isfinite(gs.gap) ? json(clean(gs.gap)) : json(nullptr);
    r.results["blocks"] = gs.blocks;
    bool uniform = true;
    for (const auto& v : gs.states) uniform = uniform && hcode::uniform_amplitude(v, 1e-8);
    r.results["uniform_ground_vectors"] = uniform;
    if (a.op == "h")
      r.checks.push_back(hcode::make_check("ground_degeneracy", 3, gs.degeneracy(), gs.degeneracy() == 3));
    if (a.op == "hprime") {
      const double overlap =
          gs.degeneracy() == 1 ? std::norm(hcode::code_state(hcode::HCode(l)).dot(gs.states[0])) : 0.0;
      r.checks.push_back(hcode::make_check("ground_degeneracy", 1, gs.degeneracy(), gs.degeneracy() == 1));
      r.checks.push_back(hcode::make_check("overlap_with_code_state", 1.0, overlap, overlap >= 1.0 - 1e-9, 1e-9));
    }
    if (boundary) {
      const double want = -3.0 * static_cast<double>(a.boundary_length);
      r.checks.push_back(hcode::make_check("ground_energy", want, gs.energy, std::abs(gs.energy - want) < 1e-8, 1e-8));
      r.checks.push_back(hcode::make_check("ground_degeneracy", 3, gs.degeneracy(), gs.degeneracy() == 3));
    }
  }
  r.wall_time_s = seconds_since(t0);
  return finish(r, json_path, true);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcode: H-code lattices over GF(3), their codes, entropies and spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned workers = 0;
  std::string json_path;
  app.add_option("--workers", workers, "worker threads, 0 = available parallelism")->capture_default_str();
  app.add_option("--json", json_path, "also write the JSON report to this file");

  AdmissibleArgs adm;
  auto* c_adm = app.add_subcommand("admissible", "minimal admissible row counts as a CSV table");
  c_adm->add_option("--n", adm.n, "boundary length n or range a..b")->required();
  c_adm->add_option("--m-max", adm.m_max, "largest row count searched")->capture_default_str()->check(CLI::PositiveNumber);

  unsigned k = 2;
  auto* c_ver = app.add_subcommand("verify-all", "run every reproduction check up to the 3^k x 3^k torus");
  c_ver->add_option("--k", k, "largest k, 1 or 2")->capture_default_str();

  LatticeFlags lat_cw, lat_dist, lat_ent, lat_spec;
  std::string boundary, out_path;
  auto* c_cw = app.add_subcommand("codeword", "grow the codeword of a boundary row");
  lat_cw.add_to(c_cw);
  c_cw->add_option("--boundary", boundary, "boundary digits, e.g. 100")->required();
  c_cw->add_option("--out", out_path, "write the codeword text file here");

  std::uint64_t samples = 100000;
  auto* c_dist = app.add_subcommand("distance", "minimum distance and sector census");
  lat_dist.add_to(c_dist);
  c_dist->add_option("--samples", samples, "random codewords when the sweep is infeasible")->capture_default_str();

  EntropyArgs ent;
  auto* c_ent = app.add_subcommand("entropy", "entanglement entropy of a region of the code state");
  lat_ent.add_to(c_ent);
  c_ent->add_option("--region", ent.region, "triangle | topo | all | sites:i,j,... | row:r | col:c")->required();
  c_ent->add_option("--sector", ent.sector, "charge sector 0, 1 or 2 (default: whole code)")->check(CLI::Range(0, 2));
  c_ent->add_option("--method", ent.method, "rank or brute-force")->capture_default_str();

  SpectrumArgs spec;
  auto* c_spec = app.add_subcommand("spectrum", "spectra of the 3x3 torus Hamiltonians or the boundary chain");
  lat_spec.add_to(c_spec);
  c_spec->add_option("--operator", spec.op, "hz | hx | hxp | h | hprime | boundary")->capture_default_str();
  c_spec->add_option("--sector", spec.sector, "restrict to one charge sector")->check(CLI::Range(0, 2));
  c_spec->add_option("--length", spec.boundary_length, "boundary chain length for --operator boundary")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*c_adm) return run_admissible(adm, workers, json_path);
    if (*c_ver) return run_verify_all(k, workers, json_path);
    if (*c_cw) return run_codeword(lat_cw.require(), boundary, out_path, json_path);
    if (*c_dist) return run_distance(lat_dist.require(), samples, workers, json_path);
    if (*c_ent) return run_entropy(lat_ent.require(), ent, json_path);
    if (*c_spec) return run_spectrum(lat_spec.get(), spec, json_path);
  } catch (const hcode::ClosureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
