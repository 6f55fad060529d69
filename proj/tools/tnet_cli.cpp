// tnet: generate instances, build and check eps-t-nets, report dimensions.
//
// Exit codes: 0 valid / success, 1 invalid net, 2 parse error or bad
// parameters, 3 construction error (error name on stderr).

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tnet/tnet.hpp"
#include "tnet/methods.hpp"

namespace {

using namespace tnet;

struct Globals {
  std::uint64_t seed = 0;
  std::string output;
  bool allow_invalid = false;
  bool quiet = false;
};

int exit_code_for(ErrorCode c) {
  return (c == ErrorCode::ParseError || c == ErrorCode::BadInput) ? 2 : 3;
}

void say(const Globals& g, const std::string& line) {
  if (!g.quiet) std::cout << line << "\n";
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// A loaded instance: always a hypergraph, plus points when it came from a
// .pts file or a point generator.
struct Loaded {
  std::string name;
  Hypergraph hyper;
  std::optional<geo::PointSet> points;
  std::optional<std::vector<Index>> cycle;
};

Loaded load_instance(const std::string& path, const std::string& family) {
  Loaded out;
  out.name = path;
  const std::string text = io::read_file(path);
  if (ends_with(path, ".pts")) {
    out.points = geo::parse_pts(text);
    out.hyper = geo::compile(*out.points, geo::parse_range_kind(family)).hyper;
  } else {
    auto hg = io::parse_hg(text);
    out.hyper = std::move(hg.hyper);
    out.cycle = std::move(hg.cycle);
  }
  return out;
}

// "grid:10:halfplane", "random-uniform:30:disk[:seed]", "staircase:8:rect",
// "interval:20".
Loaded generate(const std::string& spec, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  require(parts.size() >= 2, ErrorCode::BadInput, "generator spec '" + spec + "' needs kind:size[:family]");
  const std::string& kind = parts[0];
  std::size_t size = 0;
  try {
    size = std::stoul(parts[1]);
  } catch (const std::exception&) {
    fail(ErrorCode::BadInput, "bad size in generator spec '" + spec + "'");
  }
  Loaded out;
  out.name = spec;
  if (kind == "interval") {
    out.hyper = gen::intervals(size);
    return out;
  }
  const std::string family = parts.size() >= 3 ? parts[2] : "halfplane";
  if (parts.size() >= 4) seed = std::stoull(parts[3]);
  if (kind == "grid")
    out.points = geo::grid(size);
  else if (kind == "random-uniform")
    out.points = geo::random_uniform(size, seed);
  else if (kind == "staircase")
    out.points = geo::staircase(size);
  else
    fail(ErrorCode::BadInput, "unknown generator '" + kind + "'");
  out.hyper = geo::compile(*out.points, geo::parse_range_kind(family)).hyper;
  return out;
}

// Hypergraph a net is checked against: geometric methods are checked against
// their own range family on the points.
Hypergraph verification_target(const Loaded& in, const std::string& method) {
  if (const auto fam = method_family(method); fam && in.points) return geo::compile(*in.points, *fam).hyper;
  return in.hyper;
}

template <typename F>
int guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"eps-t-net toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_option("--output,-o", g.output, "output path (prefix for gen)");
  app.add_flag("--allow-invalid", g.allow_invalid, "exit 0 even when the net fails verification");
  app.add_flag("--quiet,-q", g.quiet, "suppress summaries");
  app.fallthrough();

  int rc = 0;

  // gen ------------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance (.pts and/or .hg)");
  std::string gen_kind, gen_family = "halfplane", gen_input;
  std::size_t gen_n = 0, gen_side = 0;
  std::int64_t gen_range = 0;
  gen_cmd->add_option("kind", gen_kind, "grid | random-uniform | staircase | interval | file")->required();
  gen_cmd->add_option("--n", gen_n, "number of points / vertices");
  gen_cmd->add_option("--side", gen_side, "grid side length");
  gen_cmd->add_option("--range", gen_range, "coordinate range for random-uniform");
  gen_cmd->add_option("--family", gen_family, "halfplane | disk | rect | frame | segment");
  gen_cmd->add_option("--input", gen_input, ".pts file for kind=file");
  gen_cmd->callback([&] {
    rc = guarded([&] {
      const std::string prefix = g.output.empty() ? "instance" : g.output;
      std::optional<geo::PointSet> pts;
      Hypergraph h;
      std::size_t raw = 0;
      if (gen_kind == "interval") {
        require(gen_n >= 1, ErrorCode::BadInput, "interval needs --n >= 1");
        h = gen::intervals(gen_n);
        raw = h.num_edges();
      } else {
        if (gen_kind == "grid") {
          require(gen_side >= 1, ErrorCode::BadInput, "grid needs --side");
          pts = geo::grid(gen_side);
        } else if (gen_kind == "random-uniform") {
          require(gen_n >= 1, ErrorCode::BadInput, "random-uniform needs --n");
          pts = geo::random_uniform(gen_n, g.seed, gen_range);
        } else if (gen_kind == "staircase") {
          pts = geo::staircase(gen_n);
        } else if (gen_kind == "file") {
          require(!gen_input.empty(), ErrorCode::BadInput, "file needs --input");
          pts = geo::parse_pts(io::read_file(gen_input));
        } else {
          fail(ErrorCode::BadInput, "unknown kind '" + gen_kind + "'");
        }
        const auto fam = geo::canonical_ranges(*pts, geo::parse_range_kind(gen_family));
        raw = fam.ranges.size();
        h = geo::compile(*pts, fam).hyper;
        io::write_file(prefix + ".pts", geo::serialize_pts(*pts));
      }
      io::write_file(prefix + ".hg", io::serialize_hg(h));
      say(g, "n=" + std::to_string(h.n()) + " edges=" + std::to_string(h.num_edges()) +
                 " distinct=" + std::to_string(h.dedup().num_edges()) + " candidates=" + std::to_string(raw));
      return 0;
    });
  });

  // construct ------------------------------------------------------------
  auto* con_cmd = app.add_subcommand("construct", "build an eps-t-net");
  std::string con_input, con_family = "halfplane", con_points, con_csv, con_instance;
  MethodParams mp;
  std::size_t con_d = 0;
  con_cmd->add_option("input", con_input, ".hg or .pts file")->required();
  con_cmd->add_option("--method,-m", mp.method, "random|det|direct|trivial|lc|vc1|exact|frames|rects")->required();
  con_cmd->add_option("--eps", mp.eps, "eps in (0,1]")->required();
  con_cmd->add_option("-t", mp.t, "subset size")->capture_default_str();
  auto* d_opt = con_cmd->add_option("-d", con_d, "dimension for det/direct/trivial/lc");
  con_cmd->add_option("--oversample", mp.oversample, "sampling factor for random/lc");
  con_cmd->add_option("--family", con_family, "range family when the input is .pts");
  con_cmd->add_option("--points", con_points, ".pts file for frames/rects with .hg input");
  con_cmd->add_option("--csv", con_csv, "append the report row to this CSV file");
  con_cmd->add_option("--instance", con_instance, "instance name for the report row");
  con_cmd->callback([&] {
    rc = guarded([&] {
      Loaded in;
      try {
        const auto fam = method_family(mp.method);
        in = load_instance(con_input, fam ? std::string(geo::name(*fam)) : con_family);
        if (!con_points.empty()) in.points = geo::parse_pts(io::read_file(con_points));
      } catch (const Error& e) {
        if (e.code() == ErrorCode::TooLarge) throw;
        throw Error(ErrorCode::ParseError, e.detail());
      }
      if (*d_opt) mp.d = con_d;
      mp.seed = g.seed;
      mp.points = in.points ? &*in.points : nullptr;
      const auto start = std::chrono::steady_clock::now();
      const TSubsetFamily net = run_method(in.hyper, mp);
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      NetReport rep = verify_net(verification_target(in, mp.method), mp.eps, mp.t, net);
      rep.instance = con_instance.empty() ? con_input : con_instance;
      rep.method = mp.method;
      rep.runtime_ms = ms;
      const std::string text = io::serialize_net(net, mp.eps);
      if (g.output.empty())
        std::cout << text;
      else
        io::write_file(g.output, text);
      if (!con_csv.empty()) {
        const bool fresh = !std::ifstream(con_csv).good();
        std::ofstream csv(con_csv, std::ios::app);
        if (fresh) csv << net_report_header() << "\n";
        csv << to_csv_row(rep) << "\n";
      }
      std::cerr << to_csv_row(rep) << "\n";
      if (!rep.valid) std::cerr << "uncovered heavy edge " << *rep.witness << "\n";
      return rep.valid || g.allow_invalid ? 0 : 1;
    });
  });

  // verify ---------------------------------------------------------------
  auto* ver_cmd = app.add_subcommand("verify", "check a net against a hypergraph");
  std::string ver_hg, ver_net;
  double ver_eps = -1;
  std::size_t ver_t = 0;
  ver_cmd->add_option("hypergraph", ver_hg, ".hg file")->required();
  ver_cmd->add_option("net", ver_net, ".net file")->required();
  ver_cmd->add_option("--eps", ver_eps, "override the eps stored in the net");
  ver_cmd->add_option("-t", ver_t, "override the t stored in the net");
  ver_cmd->callback([&] {
    rc = guarded([&] {
      Hypergraph h;
      io::NetFile nf;
      try {
        h = io::parse_hg(io::read_file(ver_hg)).hyper;
        nf = io::parse_net(io::read_file(ver_net), h.n());
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.detail());
      }
      const double eps = ver_eps > 0 ? ver_eps : nf.eps;
      const std::size_t t = ver_t > 0 ? ver_t : nf.family.t;
      const auto rep = verify_net(h, eps, t, nf.family);
      if (rep.valid) {
        say(g, "valid size=" + std::to_string(rep.size));
        return 0;
      }
      std::string witness;
      for (Index v : h.edge(*rep.witness).indices()) witness += " " + std::to_string(v);
      std::cout << "invalid: heavy edge " << *rep.witness << " uncovered:" << witness << "\n";
      return 1;
    });
  });

  // dims -----------------------------------------------------------------
  auto* dims_cmd = app.add_subcommand("dims", "VC and t-VC dimensions");
  std::string dims_hg, dims_family = "halfplane";
  std::vector<std::size_t> dims_ts{2};
  std::size_t dims_fit = 0, dims_max_vc = kVcExactMaxVertices, dims_max_tvc = kTvcExactMaxVertices;
  dims_cmd->add_option("input", dims_hg, ".hg or .pts file")->required();
  dims_cmd->add_option("-t", dims_ts, "t values for the t-VC-dimension")->capture_default_str();
  dims_cmd->add_option("--fit", dims_fit, "fit the dual shatter function up to this m");
  dims_cmd->add_option("--family", dims_family, "range family when the input is .pts");
  dims_cmd->add_option("--max-vertices", dims_max_vc, "vertex limit for the exact VC search");
  dims_cmd->add_option("--max-vertices-t", dims_max_tvc, "vertex limit for the exact t-VC search");
  dims_cmd->callback([&] {
    rc = guarded([&] {
      Loaded in;
      try {
        in = load_instance(dims_hg, dims_family);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::TooLarge) throw;
        throw Error(ErrorCode::ParseError, e.detail());
      }
      const auto r = dimension_report(in.hyper, dims_ts, dims_fit ? std::optional(dims_fit) : std::nullopt,
                                      dims_max_vc, dims_max_tvc);
      std::cout << "vc=" << r.vc << "\n";
      std::cout << "dual_vc_bound=" << r.dual_vc_bound << "\n";
      for (const auto& [t, v] : r.t_vc) std::cout << "t_vc[" << t << "]=" << v << "\n";
      if (r.dual_fit) std::cout << "dual_fit c=" << r.dual_fit->c << " d*=" << r.dual_fit->d_star << "\n";
      return 0;
    });
  });

  // turan ----------------------------------------------------------------
  auto* tur_cmd = app.add_subcommand("turan", "Turan number and the matching minimum net");
  std::size_t tn = 0, tk = 0, tt = 0;
  bool tur_header = false;
  tur_cmd->add_option("-n", tn)->required();
  tur_cmd->add_option("-k", tk)->required();
  tur_cmd->add_option("-t", tt)->required();
  tur_cmd->add_flag("--header", tur_header, "print the CSV header first");
  tur_cmd->callback([&] {
    rc = guarded([&] {
      if (tn < tk || tk <= tt || tt < 2) fail(ErrorCode::BadInput, "need n >= k > t >= 2");
      const auto r = check_turan_identity(tn, tk, tt);
      if (tur_header) std::cout << "n,k,t,turan,min_net,identity\n";
      std::cout << r.n << "," << r.k << "," << r.t << "," << r.turan_number << "," << r.min_net_size << ","
                << (r.identity_holds ? "true" : "false") << "\n";
      return r.identity_holds ? 0 : 1;
    });
  });

  // color ----------------------------------------------------------------
  auto* col_cmd = app.add_subcommand("color", "rainbow pair colouring");
  std::string col_hg;
  double col_eps = 0;
  col_cmd->add_option("input", col_hg, ".hg file")->required();
  col_cmd->add_option("--eps", col_eps)->required();
  col_cmd->callback([&] {
    rc = guarded([&] {
      Hypergraph h;
      try {
        h = io::parse_hg(io::read_file(col_hg)).hyper;
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.detail());
      }
      const auto c = rainbow_pair_coloring(h, col_eps, g.seed);
      const bool ok = verify_rainbow(h, col_eps, c);
      if (!g.output.empty()) {
        std::string text;
        for (Index u = 0; u < h.n(); ++u)
          for (Index v = u + 1; v < h.n(); ++v)
            text += "c " + std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(c.color(u, v)) + "\n";
        io::write_file(g.output, text);
      }
      std::cout << "num_colors=" << c.num_colors << " rounds=" << c.rounds << " rainbow=" << (ok ? "true" : "false")
                << "\n";
      return ok ? 0 : 1;
    });
  });

  // experiment -----------------------------------------------------------
  auto* exp_cmd = app.add_subcommand("experiment", "sweep methods x eps x t over instances, CSV out");
  std::vector<std::string> exp_inputs, exp_gens, exp_methods;
  std::vector<double> exp_eps;
  std::vector<std::size_t> exp_ts{1};
  std::string exp_family = "halfplane";
  std::size_t exp_d = 0;
  bool exp_timing = false;
  exp_cmd->add_option("--input", exp_inputs, ".hg/.pts instance files");
  exp_cmd->add_option("--gen", exp_gens, "generator specs, e.g. grid:6:halfplane or interval:20");
  exp_cmd->add_option("--methods", exp_methods, "methods to run")->required();
  exp_cmd->add_option("--eps", exp_eps, "eps values")->required();
  exp_cmd->add_option("-t", exp_ts, "t values")->capture_default_str();
  auto* exp_d_opt = exp_cmd->add_option("-d", exp_d, "dimension passed to det/direct/trivial/lc");
  exp_cmd->add_option("--family", exp_family, "range family for .pts inputs");
  exp_cmd->add_flag("--timing", exp_timing, "record wall-clock runtimes (output no longer byte-stable)");
  exp_cmd->callback([&] {
    rc = guarded([&] {
      std::vector<Loaded> instances;
      try {
        for (const auto& p : exp_inputs) instances.push_back(load_instance(p, exp_family));
      } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.detail());
      }
      for (const auto& s : exp_gens) instances.push_back(generate(s, g.seed));
      require(!instances.empty(), ErrorCode::BadInput, "no instances (use --input or --gen)");
      std::string csv = net_report_header() + ",n,edges,status\n";
      for (const auto& in : instances)
        for (const auto& m : exp_methods)
          for (double eps : exp_eps)
            for (std::size_t t : exp_ts) {
              MethodParams p;
              p.method = m;
              p.eps = eps;
              p.t = t;
              if (*exp_d_opt) p.d = exp_d;
              p.seed = g.seed;
              p.points = in.points ? &*in.points : nullptr;
              NetReport rep;
              std::string status = "ok";
              const auto start = std::chrono::steady_clock::now();
              try {
                const auto net = run_method(in.hyper, p);
                rep = verify_net(verification_target(in, m), eps, t, net);
              } catch (const Error& e) {
                status = std::string(name(e.code()));
                rep.eps = eps;
                rep.t = t;
              }
              rep.instance = in.name;
              rep.method = m;
              rep.runtime_ms =
                  exp_timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count()
                             : 0.0;
              csv += to_csv_row(rep) + "," + std::to_string(in.hyper.n()) + "," +
                     std::to_string(in.hyper.num_edges()) + "," + status + "\n";
            }
      if (g.output.empty())
        std::cout << csv;
      else
        io::write_file(g.output, csv);
      return 0;
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return rc;
}
