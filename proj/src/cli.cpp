#include "ryser/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ryser/analysis.hpp"
#include "ryser/canonical.hpp"
#include "ryser/constructions.hpp"
#include "ryser/cover.hpp"
#include "ryser/io.hpp"
#include "ryser/parallel.hpp"
#include "ryser/search.hpp"

namespace ryser::cli {

namespace {

using json = nlohmann::json;

constexpr int kSchema = 1;

json vertex_json(VertexRef v) { return json::array({v.part + 1, v.index + 1}); }

json edges_json(const std::vector<EdgeId>& edges) {
  json out = json::array();
  for (EdgeId e : edges) out.push_back(e + 1);
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string cover_line(const std::vector<VertexRef>& cover) {
  std::string line = "cover";
  for (auto v : cover) line += " " + to_string(v);
  return line;
}

// ---- verify ----

int cmd_verify(const std::string& file, bool as_json, std::ostream& out) {
  auto h = load_instance(file);
  auto check = is_intersecting(h);
  if (as_json) {
    json witness = nullptr;
    if (check.witness) witness = json::array({check.witness->first + 1, check.witness->second + 1});
    emit(out, {{"schema", kSchema},
               {"r", h.r()},
               {"m", h.m()},
               {"intersecting", check.intersecting},
               {"witness", witness}});
  } else if (check.intersecting) {
    out << "ok: " << h.r() << "-partite, " << h.m() << " edges, intersecting\n";
  } else {
    out << "not intersecting: E" << check.witness->first + 1 << " and E" << check.witness->second + 1
        << " are disjoint\n";
  }
  return check.intersecting ? kOk : kPropertyFails;
}

// ---- tau ----

int cmd_tau(const std::string& file, std::optional<int> limit, bool certificate, bool as_json, int threads,
            std::ostream& out) {
  auto h = load_instance(file);
  auto result = cover_number(h, {limit, threads});
  if (as_json) {
    json j = certificate_json(result);
    j["schema"] = kSchema;
    j["kind"] = std::string(to_string(result.certificate.kind));
    emit(out, j);
  } else {
    if (result.tau)
      out << "tau " << *result.tau << '\n';
    else
      out << "tau > " << *result.certificate.exhausted_size << '\n';
    if (certificate) {
      out << cover_line(result.certificate.vertices) << '\n';
      out << "kind " << to_string(result.certificate.kind) << '\n';
      out << "exhausted " << result.certificate.exhausted_size.value_or(-1) << '\n';
    }
  }
  return result.exceeds_limit() ? kPropertyFails : kOk;
}

// ---- report ----

json lemma_json(const PartiteHypergraph& h, std::string& human) {
  json lemmas = {{"eight_edge", nullptr}, {"degree_scheme", nullptr}, {"hypotheses", nullptr}};
  try {
    auto rep = check_8edge_lemma(h);
    auto scheme = classify_degree_scheme(h);
    json witnesses = json::array();
    for (const auto& w : rep.degree3_witness) witnesses.push_back(w ? vertex_json(*w) : json(nullptr));
    json checks = json::array();
    for (const auto& c : rep.skeleton_checks) checks.push_back({{"name", c.name}, {"holds", c.holds}});
    json shared = json::array();
    for (auto v : rep.heavy_shared) shared.push_back(vertex_json(v));
    lemmas["hypotheses"] = "hold";
    lemmas["eight_edge"] = {
        {"degree3_in_every_part", rep.degree3_in_every_part},
        {"degree3_witness", witnesses},
        {"heavy_pair",
         rep.heavy_pair ? json::array({rep.heavy_pair->first + 1, rep.heavy_pair->second + 1}) : json(nullptr)},
        {"heavy_shared", shared},
        {"skeleton_checks", checks},
        {"conclusions_hold", rep.conclusions_hold()}};
    json parts = json::array();
    for (const auto& p : scheme.parts) parts.push_back({{"type", std::string(to_string(p.type))}, {"degrees", p.degrees}});
    lemmas["degree_scheme"] = {{"parts", parts}, {"matches", scheme.matches_lemma()}};

    std::ostringstream os;
    os << "8-edge lemma: degree-3 vertex in every part: " << (rep.degree3_in_every_part ? "yes" : "no")
       << "; edges sharing two degree-3 vertices: ";
    if (rep.heavy_pair)
      os << "E" << rep.heavy_pair->first + 1 << ", E" << rep.heavy_pair->second + 1 << '\n';
    else
      os << "none\n";
    for (const auto& c : rep.skeleton_checks) os << "  " << (c.holds ? "[x] " : "[ ] ") << c.name << '\n';
    os << "degree scheme:";
    for (const auto& p : scheme.parts) os << ' ' << to_string(p.type);
    os << (scheme.matches_lemma() ? " (matches)\n" : " (does not match)\n");
    human = os.str();
  } catch (const HypothesisError& e) {
    lemmas["hypotheses"] = e.what();
    human = std::string("8-edge lemma: not applicable (") + e.what() + ")\n";
  }
  return lemmas;
}

int cmd_report(const std::string& file, bool as_json, std::ostream& out) {
  auto h = load_instance(file);
  auto table = degree_table(h);
  auto linear = linearity_report(h);
  auto inter = is_intersecting(h);
  std::optional<Ratio> ratio;
  if (h.m() >= 1 && h.r() >= 2) ratio = ryser_ratio(h);
  int tau = *cover_number(h).tau;
  int nu = matching_number(h);
  std::string lemma_text;
  json lemmas = lemma_json(h, lemma_text);

  if (as_json) {
    json degrees = json::array();
    for (std::size_t p = 0; p < table.rows.size(); ++p)
      for (const auto& [d, entries] : table.rows[p])
        for (const auto& e : entries)
          degrees.push_back({{"vertex", vertex_json(e.vertex)}, {"degree", d}, {"edges", edges_json(e.edges)}});
    json pairs = json::array();
    for (const auto& p : linear.pairs)
      pairs.push_back({{"edges", json::array({p.edges.first + 1, p.edges.second + 1})}, {"size", p.size}});
    emit(out, {{"schema", kSchema},
               {"r", h.r()},
               {"m", h.m()},
               {"part_sizes", h.part_sizes()},
               {"intersecting", inter.intersecting},
               {"tau", tau},
               {"nu", nu},
               {"degrees", degrees},
               {"linearity", {{"linear", linear.linear()}, {"pairs", pairs}}},
               {"ratio", ratio ? json{{"num", ratio->num}, {"den", ratio->den}} : json(nullptr)},
               {"lemmas", lemmas}});
    return kOk;
  }

  out << h.r() << "-partite, " << h.m() << " edges, " << (inter.intersecting ? "intersecting" : "not intersecting")
      << ", tau " << tau << ", nu " << nu << '\n';
  out << table.render();
  if (linear.linear()) {
    out << "linear: every two edges meet in exactly one vertex\n";
  } else {
    out << "non-singleton intersections:";
    for (const auto& p : linear.pairs)
      out << " (E" << p.edges.first + 1 << ",E" << p.edges.second + 1 << "):" << p.size;
    out << '\n';
  }
  if (ratio) out << "tau / ((r-1) nu) = " << ratio->num << '/' << ratio->den << '\n';
  out << lemma_text;
  return kOk;
}

// ---- gen / pad / canon ----

void write_output(const PartiteHypergraph& h, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    write_instance(out, h);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_instance(file, h);
  if (!file) throw std::runtime_error("cannot write " + path);
}

int cmd_canon(const std::string& file, bool as_json, std::ostream& out) {
  auto h = load_instance(file);
  auto form = canonical_form(h);
  if (as_json) {
    std::string hex;
    char buf[3];
    for (unsigned char c : form.bytes()) {
      std::snprintf(buf, sizeof buf, "%02x", c);
      hex += buf;
    }
    emit(out, {{"schema", kSchema}, {"r", form.r}, {"m", form.m}, {"bytes", hex},
               {"instance", format_instance(form.to_hypergraph())}});
  } else {
    write_instance(out, form.to_hypergraph());
  }
  return kOk;
}

// ---- search ----

int cmd_search(SearchParams params, bool as_json, std::ostream& out) {
  auto outcome = search_extremal(params);
  json summary = {{"schema", kSchema},
                  {"status", std::string(to_string(outcome.status))},
                  {"count", outcome.instances.size()},
                  {"nodes", outcome.nodes},
                  {"seconds", outcome.seconds},
                  {"r", outcome.r},
                  {"m", outcome.m},
                  {"tau", outcome.tau},
                  {"cap", outcome.cap},
                  {"mode", std::string(to_string(outcome.mode))}};
  if (as_json) {
    json instances = json::array();
    for (const auto& h : outcome.hypergraphs()) instances.push_back(format_instance(h));
    summary["instances"] = instances;
    emit(out, summary);
  } else {
    int i = 0;
    for (const auto& h : outcome.hypergraphs()) {
      out << "# instance " << ++i << '\n';
      write_instance(out, h);
      out << '\n';
    }
    out << summary.dump() << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal intersecting r-partite hypergraphs", "ryser"};
  app.require_subcommand(1);

  std::string file;
  bool as_json = false;

  auto* verify = app.add_subcommand("verify", "check that FILE is a well-formed intersecting instance");
  verify->add_option("file", file, "instance file")->required();
  verify->add_flag("--json", as_json, "JSON output");

  std::optional<int> limit;
  bool certificate = false;
  int threads = default_threads();
  auto* tau = app.add_subcommand("tau", "exact cover number");
  tau->add_option("file", file, "instance file")->required();
  tau->add_option("--limit", limit, "give up above this cover size")->check(CLI::NonNegativeNumber);
  tau->add_flag("--certificate", certificate, "print the cover and what was exhausted");
  tau->add_flag("--json", as_json, "JSON output");
  tau->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "degree table, linearity, ratio and lemma verdicts");
  report->add_option("file", file, "instance file")->required();
  report->add_flag("--json", as_json, "JSON output");

  std::string output;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->require_subcommand(1);
  int q = 0;
  auto* tpp = gen->add_subcommand("tpp", "truncated projective plane of order q");
  tpp->add_option("--q", q, "plane order")->required();
  tpp->add_option("-o,--output", output, "output file (default stdout)");
  std::string name;
  auto* paper = gen->add_subcommand("paper", "built-in instance");
  paper->add_option("--name", name, "f6 or f7")->required();
  paper->add_option("-o,--output", output, "output file (default stdout)");

  int to = 0;
  auto* pad = app.add_subcommand("pad", "lift to more parts");
  pad->add_option("file", file, "instance file")->required();
  pad->add_option("--to", to, "target number of parts")->required();
  pad->add_option("-o,--output", output, "output file (default stdout)");

  auto* canon = app.add_subcommand("canon", "canonical form");
  canon->add_option("file", file, "instance file")->required();
  canon->add_flag("--json", as_json, "JSON output");

  SearchParams sp;
  std::string mode = "first";
  std::optional<int> cap, max_instances;
  std::string checkpoint;
  int split_depth = sp.split_depth;
  auto* search = app.add_subcommand("search", "orderly search for intersecting instances with large tau");
  search->add_option("--r", sp.r, "number of parts")->required();
  search->add_option("--m", sp.m, "number of edges")->required();
  search->add_option("--tau", sp.tau, "required cover number")->required();
  search->add_option("--cap", cap, "max vertices per part (default m)");
  search->add_option("--mode", mode, "first or all")->check(CLI::IsMember({"first", "all"}));
  search->add_option("--max-instances", max_instances, "stop after this many instances (mode all)");
  search->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", checkpoint, "progress file; resumed when it exists");
  search->add_option("--split-depth", split_depth, "frontier depth handed to workers")
      ->check(CLI::NonNegativeNumber);
  search->add_flag("--json", as_json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, as_json, out);
    if (tau->parsed()) return cmd_tau(file, limit, certificate, as_json, threads, out);
    if (report->parsed()) return cmd_report(file, as_json, out);
    if (tpp->parsed()) {
      write_output(truncated_projective_plane(q), output, out);
      return kOk;
    }
    if (paper->parsed()) {
      write_output(paper_instance(paper_instance_from_name(name)), output, out);
      return kOk;
    }
    if (pad->parsed()) {
      write_output(pad_to(load_instance(file), to), output, out);
      return kOk;
    }
    if (canon->parsed()) return cmd_canon(file, as_json, out);
    if (search->parsed()) {
      sp.cap = cap;
      sp.mode = search_mode_from_name(mode);
      sp.max_instances = max_instances;
      sp.threads = threads;
      sp.split_depth = split_depth;
      if (!checkpoint.empty()) sp.checkpoint = checkpoint;
      return cmd_search(sp, as_json, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << "error: no command\n";
  return kUsageError;
}

}  // namespace ryser::cli
