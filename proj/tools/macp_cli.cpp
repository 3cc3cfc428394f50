// Command-line driver: enumeration, verification suites, realization maps,
// samplers, homology and the adjoined-element embedding.

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "macp/flags.hpp"
#include "macp/io.hpp"
#include "macp/parallel.hpp"
#include "macp/suites.hpp"

namespace {

using namespace macp;

enum Exit { kPass = 0, kPropertyFailure = 1, kResource = 2, kParse = 3, kMath = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  return text;
}

// Accepts literal text or a path to a file holding it.
std::string text_or_file(const std::string& value, std::string_view literal_prefix) {
  if (value.substr(0, literal_prefix.size()) == literal_prefix) return value;
  return read_file(value);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream file(out);
  if (!file) throw ParseError("cannot write " + out);
  file << text;
  if (text.empty() || text.back() != '\n') file << '\n';
}

std::string render_poset(const Poset& p, const std::vector<int>& rank, const Json& header, const std::string& format) {
  if (format == "dot") return poset_to_dot(p);
  if (format == "text") {
    std::ostringstream os;
    for (int x = 0; x < p.size(); ++x) os << rank[static_cast<std::size_t>(x)] << '\t' << p.label(x) << '\n';
    return os.str();
  }
  Json j = poset_to_json(p);
  j["header"] = header;
  return j.dump(1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and verification for rank-2 oriented matroid posets"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "Cap on worker threads (0 = available parallelism)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Write MacP(2,n) or MacP(1,2,n) as a poset file");
  int en_n = 0;
  bool en_flags = false;
  std::string en_out, en_format = "json", en_comparator = "chirotope";
  enumerate->add_option("--n", en_n, "Ground set size")->required();
  enumerate->add_flag("--flags", en_flags, "Enumerate flags (N, M) instead");
  enumerate->add_option("--out", en_out, "Output path (default stdout)");
  enumerate->add_option("--format", en_format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
  enumerate->add_option("--comparator", en_comparator, "Weak-order test")->check(CLI::IsMember({"chirotope", "covector"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run an exhaustive property suite");
  std::string suite, ver_out;
  int ver_n = 0;
  SuiteOptions suite_options;
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--n", ver_n, "Ground set size")->required();
  verify->add_option("--budget", suite_options.budget, "Node budget of the atom-ordering search");
  verify->add_option("--seed", suite_options.seed, "Sampler seed");
  verify->add_option("--samples", suite_options.samples, "Samples per cell");
  verify->add_option("--out", ver_out, "Report path (default stdout)");

  // om
  auto* om = app.add_subcommand("om", "Oriented matroid of a 2 x n matrix or a chirotope");
  std::string om_matrix, om_file, om_chi;
  auto* om_m = om->add_option("--matrix", om_matrix, "JSON matrix, entries as integers or \"p/q\"");
  auto* om_f = om->add_option("--file", om_file, "File holding a JSON matrix");
  auto* om_c = om->add_option("--chi", om_chi, "Chirotope text n=<n>;chi=<word>");
  om_m->excludes(om_f)->excludes(om_c);
  om_f->excludes(om_c);

  // flag
  auto* flag = app.add_subcommand("flag", "Flag of a line inside a plane");
  std::string flag_y, flag_x;
  flag->add_option("--y", flag_y, "1 x n JSON row")->required();
  flag->add_option("--x", flag_x, "2 x n JSON matrix")->required();

  // sample
  auto* sample = app.add_subcommand("sample", "Sample points of an open cell");
  std::string sample_om, sample_flag;
  int sample_count = 1;
  std::uint64_t sample_seed = 0;
  auto* so = sample->add_option("--om", sample_om, "Oriented matroid text or file");
  auto* sf = sample->add_option("--flag", sample_flag, "Flag text or file");
  so->excludes(sf);
  sample->add_option("--count", sample_count, "Number of samples")->check(CLI::NonNegativeNumber);
  sample->add_option("--seed", sample_seed, "Seed");

  // homology
  auto* homology = app.add_subcommand("homology", "GF(2) homology of an order complex");
  int hom_n = 0;
  std::string hom_kind = "macp2", hom_om, hom_flag, hom_complex;
  homology->add_option("--n", hom_n, "Ground set size for whole-poset complexes");
  homology->add_option("--kind", hom_kind, "macp2, macp1 or flags")->check(CLI::IsMember({"macp2", "macp1", "flags"}));
  homology->add_option("--om", hom_om, "Proper part of the lower interval of this oriented matroid");
  homology->add_option("--flag", hom_flag, "Proper part of the lower interval of this flag");
  homology->add_option("--complex", hom_complex, "JSON file with maximal faces");

  // embed
  auto* embed = app.add_subcommand("embed", "Embed a flag on [n] as an oriented matroid on [n+1]");
  std::string embed_flag, embed_anchor;
  embed->add_option("--flag", embed_flag, "Flag text or file")->required();
  embed->add_option("--anchor", embed_anchor, "Sign word the new row must lie above");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    set_default_threads(threads);
    const EnumerateOptions eopts{.threads = threads};

    if (*enumerate) {
      EnumerateOptions o = eopts;
      o.comparator = en_comparator == "covector" ? WeakOrderTest::Covector : WeakOrderTest::Chirotope;
      if (en_flags) {
        if (en_n > 5) throw LimitExceeded("flag enumeration supports n <= 5");
        const auto p = enumerate_macp12(en_n, o);
        const Json header{{"kind", "MacP(1,2,n)"}, {"n", en_n}, {"count", p.elements.size()}, {"f_vector", p.f_vector()}};
        emit(render_poset(p.poset, p.rank, header, en_format), en_out);
      } else {
        const auto p = enumerate_macp2(en_n, o);
        const Json header{{"kind", "MacP(2,n)"}, {"n", en_n}, {"count", p.elements.size()}, {"f_vector", p.f_vector()}};
        emit(render_poset(p.poset, p.rank, header, en_format), en_out);
      }
      return kPass;
    }

    if (*verify) {
      suite_options.threads = threads;
      const SuiteReport report = run_suite(suite, ver_n, suite_options);
      emit(to_json(report).dump(2), ver_out);
      return report.passed() ? kPass : kPropertyFailure;
    }

    if (*om) {
      if (!om_chi.empty()) {
        std::cout << canonical_form(Chirotope2::parse(om_chi)).key() << '\n';
        return kPass;
      }
      if (om_matrix.empty() && om_file.empty()) throw ParseError("om needs --matrix, --file or --chi");
      const Matrix m = parse_matrix(om_file.empty() ? om_matrix : read_file(om_file));
      std::cout << mu(m).key() << '\n';
      return kPass;
    }

    if (*flag) {
      std::cout << nu(parse_matrix(flag_y), parse_matrix(flag_x)).key() << '\n';
      return kPass;
    }

    if (*sample) {
      Json out;
      Json samples = Json::array();
      if (!sample_flag.empty()) {
        const FlagOM f = FlagOM::parse(text_or_file(sample_flag, "flag;"));
        for (const auto& [y, x] : sample_flag_cell(f, sample_count, sample_seed))
          samples.push_back({{"y", matrix_to_json(y)}, {"x", matrix_to_json(x)}, {"verified", nu(y, x) == f}});
        out["flag"] = f.key();
        out["dimension"] = flag_cell_dimension(f);
      } else {
        if (sample_om.empty()) throw ParseError("sample needs --om or --flag");
        const Rank2OM m = Rank2OM::parse(text_or_file(sample_om, "n="));
        for (const auto& x : sample_cell(m, sample_count, sample_seed))
          samples.push_back({{"x", matrix_to_json(x)}, {"verified", mu(x) == m}});
        out["om"] = m.key();
        out["dimension"] = cell_chart(m).dimension();
      }
      out["seed"] = sample_seed;
      out["samples"] = std::move(samples);
      std::cout << out.dump(1) << '\n';
      return kPass;
    }

    if (*homology) {
      Json report;
      if (!hom_complex.empty()) {
        const auto k = complex_from_json(Json::parse(read_file(hom_complex)));
        report = homology_report(k, k.dimension());
      } else if (!hom_om.empty()) {
        const Rank2OM m = Rank2OM::parse(text_or_file(hom_om, "n="));
        const auto macp = enumerate_macp2(m.size(), eopts);
        report = homology_report(order_complex(lower_interval(macp, m).proper_part()), rank_h(m) - 1);
      } else if (!hom_flag.empty()) {
        const FlagOM f = FlagOM::parse(text_or_file(hom_flag, "flag;"));
        const auto flags = enumerate_macp12(f.size(), eopts);
        report = homology_report(order_complex(flag_lower_interval(flags, f).proper_part()), flag_rank(f) - 1);
      } else {
        if (hom_n == 0) throw ParseError("homology needs --n, --om, --flag or --complex");
        Poset p;
        if (hom_kind == "macp1") p = enumerate_macp1(hom_n);
        else if (hom_kind == "flags") p = enumerate_macp12(hom_n, eopts).poset;
        else p = enumerate_macp2(hom_n, eopts).poset;
        report = homology_report(order_complex(p), -1);
      }
      std::cout << report.dump(1) << '\n';
      return kPass;
    }

    if (*embed) {
      const FlagOM f = FlagOM::parse(text_or_file(embed_flag, "flag;"));
      std::optional<SignVector> anchor;
      if (!embed_anchor.empty()) anchor = SignVector::parse(embed_anchor);
      std::cout << iota_embed(f, anchor).key() << '\n';
      return kPass;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMath;
  }
  return kPass;
}
