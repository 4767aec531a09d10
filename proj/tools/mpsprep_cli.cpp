// Copyright 2026 The mpsprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpsprep/constructor.hpp"
#include "mpsprep/gallery.hpp"
#include "mpsprep/protocols.hpp"
#include "mpsprep/pushing.hpp"

using namespace mpsprep;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 2;
constexpr int kExitUsage = 3;

struct Shared {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::int64_t budget = 0;
  std::string out;
  std::string format = "json";
  bool timing = false;
};

struct Source {
  std::string gallery;
  std::string tensor_file;
  std::vector<std::string> params;
  int d = 0;
};

struct Output {
  json doc;
  std::string csv;
  bool ok = true;
};

json parse_params(const Source& src) {
  json p = json::object();
  for (const auto& kv : src.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      fail(ErrorKind::InvalidArgument, "--param expects name=value, got " + kv);
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(kv.substr(eq + 1), &used);
      if (used != kv.size() - eq - 1) throw std::invalid_argument(kv);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "--param value is not a number: " + kv);
    }
    p[kv.substr(0, eq)] = v;
  }
  if (src.d > 0) p["d"] = src.d;
  return p;
}

struct Loaded {
  std::optional<GalleryItem> item;
  std::optional<MpsTensor> tensor;
  std::optional<BlockStructure> blocks;
  std::string basis;
  int q = 1;
};

Loaded load(const Source& src) {
  Loaded l;
  if (!src.tensor_file.empty()) {
    if (!src.gallery.empty()) fail(ErrorKind::InvalidArgument, "--gallery and --tensor are exclusive");
    l.tensor = tensor_from_json(json::parse(read_text_file(src.tensor_file)));
    return l;
  }
  if (src.gallery.empty()) fail(ErrorKind::InvalidArgument, "one of --gallery or --tensor is required");
  l.item = gallery_tensor(src.gallery, parse_params(src));
  l.tensor = l.item->tensor;
  l.blocks = l.item->blocks;
  l.basis = l.item->entry.basis;
  l.q = l.item->entry.q;
  return l;
}

BoundarySpec make_boundary(const std::string& kind, int D) {
  if (kind == "entangled") return BoundarySpec::entangled();
  if (kind == "periodic") return BoundarySpec::matrix(Mat::Identity(D, D));
  if (kind == "open") {
    Vec e = Vec::Zero(D);
    e(0) = 1.0;
    return BoundarySpec::open_edges(e, e);
  }
  fail(ErrorKind::InvalidArgument, "--boundary must be entangled, periodic or open");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    try {
      out.push_back(std::stoi(s.substr(pos, next - pos)));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "expected a comma separated integer list, got " + s);
    }
    pos = next + 1;
  }
  return out;
}

void emit(const Shared& sh, const Output& o) {
  const std::string text = sh.format == "csv" ? o.csv : dump_json(o.doc);
  if (sh.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(sh.out, text);
  }
}

std::string kv_csv(const json& flat) {
  std::vector<std::vector<std::string>> rows;
  for (auto it = flat.begin(); it != flat.end(); ++it) {
    std::string v = it.value().is_string() ? it.value().get<std::string>() : dump_json(it.value(), 0);
    while (!v.empty() && v.back() == '\n') v.pop_back();
    rows.push_back({it.key(), v});
  }
  return write_csv({"key", "value"}, rows);
}

// ---- verbs -----------------------------------------------------------------

struct ProtocolArgs {
  Source src;
  int n = 2;
  int q = 0;
  std::string basis;
  std::string boundary = "entangled";
  std::string mode = "sample";
  std::string branch;
  bool open_opt = false;
  bool literal = false;
  bool all_branches = false;
  bool detail = false;
  std::int64_t max_branches = std::int64_t{1} << 20;
};

std::vector<ProtocolReport> run_protocol(const Shared& sh, const ProtocolArgs& a, RunMode mode, json& config) {
  const Loaded l = load(a.src);
  const std::string basis = a.basis.empty() ? l.basis : a.basis;
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "--basis is required for tensor files");
  const int q = a.q > 0 ? a.q : l.q;
  config = {{"source", a.src.gallery.empty() ? a.src.tensor_file : a.src.gallery},
            {"params", l.item ? l.item->params : json::object()},
            {"n", a.n},
            {"q", q},
            {"basis", basis},
            {"boundary", a.boundary},
            {"seed", sh.seed}};
  std::vector<ProtocolReport> reports;
  if (l.blocks) {
    Protocol2Config c;
    c.blocks = *l.blocks;
    c.bases.assign(l.blocks->K(), named_defect_basis(basis));
    c.q = q;
    c.n = a.n;
    c.boundary = make_boundary(a.boundary == "open" ? "invalid" : a.boundary, l.blocks->K() * l.blocks->Dbar());
    c.mode = mode;
    c.seed = sh.seed;
    c.branch = parse_int_list(a.branch);
    c.max_branches = a.max_branches;
    reports = protocol2(c);
  } else {
    ProtocolConfig c;
    c.tensor = *l.tensor;
    c.q = q;
    c.n = a.n;
    c.basis = named_defect_basis(basis);
    c.boundary = make_boundary(a.boundary, l.tensor->D);
    c.mode = mode;
    c.seed = sh.seed;
    c.branch = parse_int_list(a.branch);
    c.open_bc_optimization = a.open_opt;
    c.literal_fusion = a.literal;
    c.max_branches = a.max_branches;
    reports = protocol1(c);
  }
  if (!sh.timing)
    for (auto& r : reports) r.wall_time_ms = 0.0;
  return reports;
}

RunMode parse_mode(const std::string& m) {
  if (m == "sample") return RunMode::Sample;
  if (m == "branch") return RunMode::Branch;
  if (m == "all") return RunMode::AllBranches;
  fail(ErrorKind::InvalidArgument, "--mode must be sample, branch or all");
}

Output cmd_simulate(const Shared& sh, const ProtocolArgs& a) {
  json config;
  const auto reports = run_protocol(sh, a, a.all_branches ? RunMode::AllBranches : parse_mode(a.mode), config);
  Output o;
  json rs = json::array();
  for (const auto& r : reports) rs.push_back(report_to_json(r));
  o.doc["config"] = config;
  o.doc["reports"] = rs;
  o.doc["summary"] = summary_to_json(summarize(reports));
  o.csv = reports_to_csv(reports);
  for (const auto& r : reports) o.ok = o.ok && r.bulk_fidelity >= 1.0 - sh.tol;
  return o;
}

Output cmd_verify(const Shared& sh, const ProtocolArgs& a) {
  json config;
  const auto reports = run_protocol(sh, a, RunMode::AllBranches, config);
  const BranchSummary s = summarize(reports);
  Output o;
  o.doc["config"] = config;
  o.doc["summary"] = summary_to_json(s);
  o.ok = s.min_fidelity >= 1.0 - sh.tol;
  o.doc["pass"] = o.ok;
  if (a.detail) {
    json rs = json::array();
    for (const auto& r : reports) rs.push_back(report_to_json(r));
    o.doc["reports"] = rs;
  }
  json flat = summary_to_json(s);
  flat["pass"] = o.ok;
  o.csv = kv_csv(flat);
  return o;
}

Output cmd_analyze(const Shared& sh, const Source& src, const std::string& basis_arg, int q_arg) {
  const Loaded l = load(src);
  const std::string basis = basis_arg.empty() ? l.basis : basis_arg;
  if (basis.empty()) fail(ErrorKind::InvalidArgument, "--basis is required for tensor files");
  const int q = q_arg > 0 ? q_arg : l.q;
  const DefectBasis b = named_defect_basis(basis);
  Output o;
  std::vector<std::vector<std::string>> rows;
  auto add_rows = [&](const PushingTable& t, int block) {
    for (const auto& e : t.entries)
      rows.push_back({std::to_string(block), std::to_string(e.g), t.basis.group.labels[e.g], e.found ? "1" : "0",
                      e.found ? t.basis.group.labels[e.partner] : "", e.found && e.partner == t.basis.group.id ? "1" : "0",
                      e.found ? fmt_double(e.relation.residual) : ""});
  };
  if (l.blocks) {
    const BlockSymmetryData* sym = nullptr;
    std::optional<BlockSymmetryData> data;
    if (src.gallery == "z4xz2") {
      data = z4xz2_symmetry();
      sym = &*data;
    }
    const BlockPushingTable t =
        build_block_pushing_table(*l.blocks, std::vector<DefectBasis>(l.blocks->K(), b), q, sym, sh.tol);
    o.doc = block_pushing_table_to_json(t);
    for (int k = 0; k < l.blocks->K(); ++k) add_rows(t.blocks[k], k);
  } else {
    const PushingTable t = build_pushing_table(block_tensor(*l.tensor, q), b, sh.tol);
    o.doc = pushing_table_to_json(t);
    add_rows(t, 0);
  }
  o.csv = write_csv({"block", "defect", "label", "found", "partner", "local_removal", "residual"}, rows);
  return o;
}

Output cmd_spectrum(const Shared&, const Source& src) {
  const Loaded l = load(src);
  const MpsTensor t = l.tensor ? *l.tensor : direct_sum(*l.blocks, true);
  const auto ev = transfer_spectrum(t);
  const CorrelationLength xi = correlation_length(t);
  Output o;
  json e = json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t k = 0; k < ev.size(); ++k) {
    e.push_back(complex_to_json(ev[k]));
    rows.push_back({std::to_string(k), fmt_double(ev[k].real()), fmt_double(ev[k].imag()), fmt_double(std::abs(ev[k]))});
  }
  o.doc["tensor"] = t.name;
  if (l.item) o.doc["params"] = l.item->params;
  o.doc["eigenvalues"] = e;
  o.doc["normal"] = is_normal(t);
  if (xi.infinite) {
    o.doc["xi"] = "inf";
  } else {
    o.doc["xi"] = xi.value;
  }
  if (l.item && l.item->xi) {
    o.doc["xi_formula"] = l.item->entry.xi_formula;
    o.doc["xi_closed_form"] = *l.item->xi;
  }
  o.csv = write_csv({"index", "re", "im", "abs"}, rows);
  return o;
}

Output cmd_sample(const Shared& sh, const std::string& kind, int d, int D, int n, int junk, int count) {
  if (count < 1) fail(ErrorKind::InvalidArgument, "--count must be positive");
  Rng rng(sh.seed);
  Output o;
  json runs = json::array();
  std::vector<std::vector<std::string>> rows;
  for (int k = 0; k < count; ++k) {
    SampleResult r;
    if (kind == "random") {
      r = sample_random_mps(d, D, n, rng);
    } else if (kind == "spt") {
      r = sample_spt_phase(junk, n, rng);
    } else {
      fail(ErrorKind::InvalidArgument, "--kind must be random or spt");
    }
    json j;
    j["run"] = k;
    j["outcomes"] = r.outcomes;
    j["boundary_outcome"] = r.boundary_outcome;
    j["boundary_X"] = mat_to_json(r.boundary.X);
    j["fidelity"] = r.fidelity;
    if (kind == "spt") j["factor_residual"] = r.factor_residual;
    j["entropy_half"] = entanglement_entropy(r.state, r.state.num_wires() / 2);
    json ts = json::array();
    for (const auto& t : r.tensors) ts.push_back(tensor_to_json(t));
    j["tensors"] = ts;
    runs.push_back(j);
    o.ok = o.ok && r.fidelity >= 1.0 - sh.tol;
    std::string outs;
    for (std::size_t i = 0; i < r.outcomes.size(); ++i) outs += (i ? " " : "") + std::to_string(r.outcomes[i]);
    rows.push_back({std::to_string(k), outs, std::to_string(r.boundary_outcome), fmt_double(r.fidelity)});
  }
  o.doc["kind"] = kind;
  o.doc["seed"] = sh.seed;
  o.doc["runs"] = runs;
  o.csv = write_csv({"run", "outcomes", "boundary_outcome", "fidelity"}, rows);
  return o;
}

Output cmd_construct(const Shared& sh, const std::string& rep_spec, const std::string& select,
                     const std::vector<std::string>& phases, bool haar, int q) {
  const ProjectiveRep v = named_defect_basis(rep_spec);
  const IrrepDecomposition dec = irrep_decomposition(tensor_square_rep(v));
  std::vector<std::pair<int, int>> picks;
  std::size_t pos = 0;
  while (pos < select.size()) {
    std::size_t next = select.find(',', pos);
    if (next == std::string::npos) next = select.size();
    const std::string tok = select.substr(pos, next - pos);
    const auto colon = tok.find(':');
    try {
      picks.emplace_back(std::stoi(tok.substr(0, colon)), colon == std::string::npos ? 0 : std::stoi(tok.substr(colon + 1)));
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidArgument, "--select expects irrep[:copy] items, got " + tok);
    }
    pos = next + 1;
  }
  const IrrepSelection sel = select_irreps(dec, picks);
  Mat w;
  json prov;
  if (haar) {
    Rng rng(sh.seed);
    w = sample_intertwiner(dec, rng);
    prov["seed"] = sh.seed;
  } else {
    std::vector<Mat> f(dec.irreps.size());
    json ph = json::object();
    for (const auto& kv : phases) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) fail(ErrorKind::InvalidArgument, "--phase expects irrep=angle");
      int j = 0;
      double ang = 0.0;
      try {
        j = std::stoi(kv.substr(0, eq));
        ang = std::stod(kv.substr(eq + 1));
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "--phase expects irrep=angle, got " + kv);
      }
      if (j < 0 || j >= static_cast<int>(f.size()) || dec.multiplicity[j] != 1)
        fail(ErrorKind::InvalidArgument, "--phase needs an irrep of multiplicity one");
      f[j] = Mat::Constant(1, 1, std::polar(1.0, ang));
      ph[kv.substr(0, eq)] = ang;
    }
    w = sample_intertwiner(dec, f);
    prov["phases"] = ph;
  }
  const ConstructedTensor c = construct_tensor(v, dec, w, sel, prov);
  Output o;
  o.doc["decomposition"] = decomposition_to_json(dec);
  o.doc["constructed"] = constructed_to_json(c);
  bool complete = false;
  if (c.normal) {
    const PushingTable t = build_pushing_table(block_tensor(c.tensor, q), v, sh.tol);
    complete = t.complete;
    o.doc["pushing_complete"] = complete;
  }
  o.ok = c.certificate.pass;
  json flat;
  flat["group"] = v.group.spec;
  flat["d"] = c.tensor.d;
  flat["D"] = c.tensor.D;
  flat["normal"] = c.normal;
  flat["certificate_pass"] = c.certificate.pass;
  flat["certificate_residual"] = c.certificate.max_residual;
  flat["pushing_complete"] = complete;
  o.csv = kv_csv(flat);
  return o;
}

Output cmd_gallery_list() {
  Output o;
  json a = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : gallery_entries()) {
    a.push_back(gallery_entry_to_json(e));
    rows.push_back({e.name, e.route, e.basis, std::to_string(e.q), e.xi_formula});
  }
  o.doc["entries"] = a;
  o.csv = write_csv({"name", "route", "basis", "q", "xi_formula"}, rows);
  return o;
}

Output cmd_gallery_show(const Source& src) {
  Output o;
  const GalleryItem item = gallery_tensor(src.gallery, parse_params(src));
  o.doc = gallery_item_to_json(item);
  json flat;
  flat["name"] = item.entry.name;
  flat["route"] = item.entry.route;
  flat["basis"] = item.entry.basis;
  flat["q"] = item.entry.q;
  flat["normal"] = item.normal;
  if (item.xi) flat["xi"] = *item.xi;
  o.csv = kv_csv(flat);
  return o;
}

void add_shared(CLI::App* app, Shared& sh) {
  app->add_option("--seed", sh.seed, "random seed");
  app->add_option("--tol", sh.tol, "fidelity / residual tolerance")->check(CLI::PositiveNumber);
  app->add_option("--budget", sh.budget, "maximum state amplitudes")->check(CLI::PositiveNumber);
  app->add_option("--out", sh.out, "write the report to this path");
  app->add_option("--format", sh.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--timing", sh.timing, "record wall-clock times");
}

void add_source(CLI::App* app, Source& src, bool with_tensor = true) {
  app->add_option("--gallery", src.gallery, "gallery entry name");
  if (with_tensor) app->add_option("--tensor", src.tensor_file, "tensor file (JSON)");
  app->add_option("--param", src.params, "gallery parameter name=value (repeatable)");
  app->add_option("--d", src.d, "shorthand for --param d=<value>");
}

void add_protocol(CLI::App* app, ProtocolArgs& a) {
  add_source(app, a.src);
  app->add_option("--n", a.n, "number of segments")->check(CLI::PositiveNumber);
  app->add_option("--q", a.q, "blocking parameter (default: gallery value)");
  app->add_option("--basis", a.basis, "defect basis: pauli<D>, wpauli<l>, a4, sp2n<n>");
  app->add_option("--boundary", a.boundary, "entangled, periodic or open")
      ->check(CLI::IsMember({"entangled", "periodic", "open"}));
  app->add_option("--max-branches", a.max_branches, "cap on enumerated branches");
  app->add_flag("--all-branches", a.all_branches, "enumerate every fusion outcome");
  app->add_flag("--detail", a.detail, "include per-branch reports");
}

int error_exit(ErrorKind k) {
  return k == ErrorKind::InvalidArgument ? kExitUsage : kExitInvariant;
}

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument:
      return "invalid_argument";
    case ErrorKind::NumericalFailure:
      return "numerical_failure";
    case ErrorKind::BudgetExceeded:
      return "budget_exceeded";
    case ErrorKind::InvariantViolation:
      return "invariant_violation";
  }
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constant-depth MPS preparation toolkit"};
  app.require_subcommand(1);
  Shared sh;

  ProtocolArgs sim, ver;
  auto* simulate = app.add_subcommand("simulate", "run Protocol 1 or 2 on a gallery entry or tensor file");
  add_shared(simulate, sh);
  add_protocol(simulate, sim);
  simulate->add_option("--mode", sim.mode, "sample, branch or all")->check(CLI::IsMember({"sample", "branch", "all"}));
  simulate->add_option("--branch", sim.branch, "comma separated outcomes for --mode branch");
  simulate->add_flag("--open-opt", sim.open_opt, "grow the right edge from |R> (open boundary only)");
  simulate->add_flag("--literal-fusion", sim.literal, "apply the fusion unitary with its ancilla");

  auto* verify = app.add_subcommand("verify", "enumerate all branches and check the fidelity");
  add_shared(verify, sh);
  add_protocol(verify, ver);

  Source an_src;
  std::string an_basis;
  int an_q = 0;
  auto* analyze = app.add_subcommand("analyze-pushing", "build the pushing table for a defect basis");
  add_shared(analyze, sh);
  add_source(analyze, an_src);
  analyze->add_option("--basis", an_basis, "defect basis");
  analyze->add_option("--q", an_q, "blocking parameter");

  Source sp_src;
  auto* spectrum = app.add_subcommand("spectrum", "transfer-matrix spectrum and correlation length");
  add_shared(spectrum, sh);
  add_source(spectrum, sp_src);

  std::string s_kind = "random";
  int s_d = 2, s_D = 2, s_n = 3, s_junk = 2, s_count = 1;
  auto* sample = app.add_subcommand("sample", "constant-depth sampling of random or SPT-phase MPS");
  add_shared(sample, sh);
  sample->add_option("--kind", s_kind, "random or spt")->check(CLI::IsMember({"random", "spt"}));
  sample->add_option("--d", s_d, "physical dimension (random)")->check(CLI::PositiveNumber);
  sample->add_option("--D", s_D, "bond dimension (random)")->check(CLI::PositiveNumber);
  sample->add_option("--n", s_n, "number of sites")->check(CLI::PositiveNumber);
  sample->add_option("--junk", s_junk, "junk dimension (spt)")->check(CLI::PositiveNumber);
  sample->add_option("--count", s_count, "number of samples")->check(CLI::PositiveNumber);

  std::string c_rep, c_select;
  std::vector<std::string> c_phases;
  bool c_haar = false;
  int c_q = 1;
  auto* construct = app.add_subcommand("construct", "build a symmetric tensor from a projective rep");
  add_shared(construct, sh);
  construct->add_option("--rep", c_rep, "projective rep: pauli<D>, wpauli<l>, a4, sp2n<n>")->required();
  construct->add_option("--select", c_select, "irreps to keep: irrep[:copy],...")->required();
  construct->add_option("--phase", c_phases, "irrep=angle phase for a multiplicity-one irrep (repeatable)");
  construct->add_flag("--haar", c_haar, "Haar-random isotypic factors from --seed");
  construct->add_option("--q", c_q, "blocking parameter for the pushing check");

  auto* gallery = app.add_subcommand("gallery", "list or show gallery entries");
  gallery->require_subcommand(1);
  auto* glist = gallery->add_subcommand("list", "list entries");
  add_shared(glist, sh);
  Source g_src;
  auto* gshow = gallery->add_subcommand("show", "show one entry with its tensor");
  add_shared(gshow, sh);
  gshow->add_option("name", g_src.gallery, "entry name")->required();
  gshow->add_option("--param", g_src.params, "parameter name=value (repeatable)");
  gshow->add_option("--d", g_src.d, "shorthand for --param d=<value>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sh.budget > 0) {
      set_amplitude_budget(sh.budget);
    } else if (const char* env = std::getenv("MPSPREP_BUDGET")) {
      try {
        set_amplitude_budget(std::stoll(env));
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidArgument, "MPSPREP_BUDGET must be an integer");
      }
    }
    Output o;
    if (*simulate) {
      o = cmd_simulate(sh, sim);
    } else if (*verify) {
      o = cmd_verify(sh, ver);
    } else if (*analyze) {
      o = cmd_analyze(sh, an_src, an_basis, an_q);
    } else if (*spectrum) {
      o = cmd_spectrum(sh, sp_src);
    } else if (*sample) {
      o = cmd_sample(sh, s_kind, s_d, s_D, s_n, s_junk, s_count);
    } else if (*construct) {
      o = cmd_construct(sh, c_rep, c_select, c_phases, c_haar, c_q);
    } else if (*glist) {
      o = cmd_gallery_list();
    } else if (*gshow) {
      o = cmd_gallery_show(g_src);
    }
    emit(sh, o);
    if (!o.ok) {
      std::cerr << "{\"error\": \"invariant_violation\", \"message\": \"fidelity or certificate below tolerance\"}\n";
      return kExitInvariant;
    }
    return kExitOk;
  } catch (const MpsError& e) {
    json j = {{"error", kind_name(e.kind())}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return error_exit(e.kind());
  } catch (const std::exception& e) {
    json j = {{"error", "failure"}, {"message", e.what()}};
    std::cerr << j.dump() << "\n";
    return kExitInvariant;
  }
}
