#include "doems/cli.hpp"

#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "doems/catalog.hpp"
#include "doems/errors.hpp"
#include "doems/ideals.hpp"
#include "doems/json_io.hpp"
#include "text_util.hpp"

namespace doems {

namespace {

struct Layer {
  unsigned p = 0;
  std::size_t n = 0;
};

void add_layer(CLI::App* cmd, Layer& layer) {
  cmd->add_option("--p", layer.p, "Prime modulus")->required();
  cmd->add_option("--n", layer.n, "Number of variables")->required();
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"records", "table"}))
      ->capture_default_str();
}

void add_catalog_dir(CLI::App* cmd, std::string& dir) {
  cmd->add_option("--catalog-dir", dir, "Catalog directory (default $DOEMS_CATALOG_DIR)");
}

std::filesystem::path catalog_dir(const std::string& dir) {
  return dir.empty() ? default_catalog_dir() : std::filesystem::path(dir);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> basis_strings(const std::vector<ModelBasis>& bases) {
  std::vector<std::string> out;
  for (const ModelBasis& b : bases) out.push_back(to_string(b));
  return out;
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& monos) {
  std::vector<std::string> out;
  for (const Monomial& m : monos) out.push_back(to_string(m));
  return out;
}

void print_records_table(const std::vector<CatalogRecord>& records, std::ostream& out) {
  out << std::left << std::setw(20) << "classlabel" << std::setw(4) << "rep" << std::setw(7)
      << "bases" << "dataset  model bases\n";
  std::set<std::string> labels;
  for (const CatalogRecord& r : records) {
    labels.insert(r.classlabel);
    out << std::left << std::setw(20) << r.classlabel << std::setw(4)
        << (r.is_representative ? "*" : "") << std::setw(7) << r.num_bases()
        << to_string(r.dataset) << "  " << join(basis_strings(r.bases), " ") << '\n';
  }
  out << records.size() << " records in " << labels.size() << " classes\n";
}

std::vector<Residue> parse_outputs(std::string_view text, const FieldSpec& field) {
  std::vector<Residue> out;
  const std::string compact = detail::strip_spaces(text);
  if (compact.empty()) throw ParseError("empty output list");
  for (std::string_view token : detail::split(compact, ',')) {
    std::size_t pos = 0;
    const std::size_t value = detail::read_uint(token, pos);
    if (pos != token.size()) throw ParseError("malformed output value '" + std::string(token) + "'");
    if (value >= field.p()) throw ParseError("output value " + std::to_string(value) + " outside Z_p");
    out.push_back(static_cast<Residue>(value));
  }
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int build(const Layer& layer, const std::string& out_path, const std::string& dir,
            bool allow_unsupported, const std::string& format) {
    BuildOptions options;
    options.allow_unsupported = allow_unsupported;
    options.log = &err_;
    const Catalog catalog = build_catalog(layer.p, layer.n, options);
    std::filesystem::path target;
    if (out_path.empty()) {
      target = catalog_file(catalog_dir(dir), layer.p, layer.n);
    } else if (std::filesystem::path(out_path).extension() == ".jsonl") {
      target = out_path;
    } else {
      target = catalog_file(out_path, layer.p, layer.n);
    }
    export_catalog(catalog, target);
    if (format == "table") {
      out_ << "wrote " << catalog.records().size() << " records to " << target.string() << '\n';
    } else {
      out_ << ojson{{"p", layer.p},
                    {"n", layer.n},
                    {"record_count", catalog.records().size()},
                    {"unrealizable", catalog.unrealizable_count()},
                    {"path", target.string()}}
                  .dump()
           << '\n';
    }
    return 0;
  }

  int query(const Layer& layer, const std::string& dir, const QueryFilter& filter,
            const std::string& format) {
    const Catalog catalog = load_catalog(catalog_dir(dir), layer.p, layer.n);
    const auto records = doems::query(catalog, filter);
    if (format == "table") {
      print_records_table(records, out_);
    } else {
      for (const CatalogRecord& r : records) out_ << record_to_line(r) << '\n';
    }
    return 0;
  }

  int summary(const Layer& layer, std::size_t m, const std::string& dir,
              const std::string& format) {
    const Catalog catalog = load_catalog(catalog_dir(dir), layer.p, layer.n);
    const SummaryStats stats = class_summary(catalog, m);
    if (format == "table") {
      out_ << "p=" << stats.p << " n=" << stats.n << " m=" << stats.m << ": "
           << stats.classes.size() << " classes, " << stats.total_sets << " data sets, bases "
           << stats.min_bases << ".." << stats.max_bases << '\n';
      for (const ClassSummary& cls : stats.classes) {
        out_ << std::left << std::setw(20) << cls.classlabel << std::setw(7) << cls.size
             << std::setw(4) << cls.num_bases << to_string(cls.representative) << "  "
             << join(basis_strings(cls.bases), " ") << '\n';
      }
    } else {
      out_ << to_json(stats).dump() << '\n';
    }
    return 0;
  }

  int whatif(const Layer& layer, const std::string& dataset, const std::string& point,
             const std::string& dir, const std::string& format) {
    const FieldSpec field(layer.p);
    const DataSet data = parse_dataset(dataset, field, layer.n);
    const Point x = parse_point(point, field, layer.n);
    std::optional<Catalog> catalog;
    const auto file = catalog_file(catalog_dir(dir), layer.p, layer.n);
    if (std::filesystem::exists(file)) catalog = import_catalog(file);
    const WhatIfResult result = whatif_add_point(data, x, catalog ? &*catalog : nullptr);
    if (format == "table") {
      out_ << "dataset " << to_string(result.augmented.dataset) << " ("
           << result.augmented.classlabel << ")\n";
      out_ << result.augmented.num_bases() << " bases: "
           << join(basis_strings(result.augmented.bases), " ") << '\n';
      out_ << "new monomials: " << join(monomial_strings(result.new_monomials), " ") << '\n';
    } else {
      out_ << to_json(result).dump() << '\n';
    }
    return 0;
  }

  int gb(const Layer& layer, const std::string& dataset, const std::string& order,
         const std::string& format) {
    const FieldSpec field(layer.p);
    const DataSet data = parse_dataset(dataset, field, layer.n);
    const GroebnerResult result = bm_reduced_gb(data, parse_term_order(order, layer.n));
    if (format == "table") {
      std::vector<std::string> polys;
      for (const MarkedPolynomial& g : result.gb.polys) polys.push_back(to_string(g));
      out_ << "order: " << to_string(result.gb.order) << '\n';
      out_ << "GB: " << join(polys, ", ") << '\n';
      out_ << "SM: " << to_string(make_basis(result.standard_monomials)) << '\n';
    } else {
      out_ << to_json(data, result).dump() << '\n';
    }
    return 0;
  }

  int bases(const Layer& layer, const std::string& dataset, const std::string& format) {
    const FieldSpec field(layer.p);
    const DataSet data = parse_dataset(dataset, field, layer.n);
    const auto annotations = enumerate_model_bases(data);
    if (format == "table") {
      for (const BasisAnnotation& ann : annotations) {
        std::vector<std::string> polys;
        for (const MarkedPolynomial& g : ann.gb) polys.push_back(to_string(g));
        out_ << to_string(ann.basis) << "  GB: " << join(polys, ", ") << '\n';
      }
      out_ << annotations.size() << " bases\n";
    } else {
      out_ << to_json(data, annotations).dump() << '\n';
    }
    return 0;
  }

  int fit(const Layer& layer, const std::string& dataset, const std::string& outputs,
          const std::string& basis, const std::string& format) {
    const FieldSpec field(layer.p);
    const DataSet data = parse_dataset(dataset, field, layer.n);
    const ModelBasis b = parse_model_basis(basis, layer.n);
    const IOData io{data, parse_outputs(outputs, field)};
    const Polynomial model = fit_minimal_model(io, b.monomials);
    if (format == "table") {
      out_ << to_string(model) << '\n';
    } else {
      out_ << ojson{{"dataset", to_string(data)},
                    {"basis", to_string(b)},
                    {"outputs", io.outputs},
                    {"model", to_string(model)}}
                  .dump()
           << '\n';
    }
    return 0;
  }

  int verify(const Layer& layer, std::optional<std::size_t> m, const std::string& dir,
             bool build_fresh, const std::string& format) {
    const Catalog catalog = build_fresh ? build_catalog(layer.p, layer.n)
                                        : load_catalog(catalog_dir(dir), layer.p, layer.n);
    std::vector<std::size_t> layers = m ? std::vector<std::size_t>{*m} : catalog.layer_sizes();
    bool all_passed = true;
    for (std::size_t size : layers) {
      const VerificationReport report = verify_theorems(catalog, size);
      all_passed = all_passed && report.passed();
      if (format == "table") {
        out_ << "p=" << report.p << " n=" << report.n << " m=" << report.m << '\n';
        for (const Check& c : report.checks) {
          out_ << "  " << (c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL") << "  " << c.name;
          if (!c.detail.empty()) out_ << " (" << c.detail << ")";
          out_ << '\n';
        }
      } else {
        out_ << to_json(report).dump() << '\n';
      }
    }
    if (!all_passed) err_ << "theorem verification failed\n";
    return all_passed ? 0 : 2;
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Design of experiments and model selection over finite fields", "doems"};
  app.require_subcommand(1);
  Runner runner(out, err);
  std::function<int()> action;

  Layer layer;
  std::string format = "records";
  std::string dir;

  auto* build = app.add_subcommand("build", "Build and store the catalog of a (p, n) layer");
  std::string out_path;
  bool allow_unsupported = false;
  add_layer(build, layer);
  build->add_option("--out", out_path, "Output directory or .jsonl file");
  build->add_flag("--allow-unsupported", allow_unsupported, "Permit non-default layers");
  add_catalog_dir(build, dir);
  add_format(build, format);
  build->callback([&] {
    action = [&] { return runner.build(layer, out_path, dir, allow_unsupported, format); };
  });

  auto* query = app.add_subcommand("query", "Select catalog records");
  std::optional<std::size_t> m;
  std::string monomial;
  std::string dataset;
  std::string classlabel;
  bool reps_only = false;
  std::optional<std::size_t> min_bases;
  std::optional<std::size_t> max_bases;
  add_layer(query, layer);
  query->add_option("--m", m, "Number of points");
  query->add_option("--contains-monomial", monomial, "Monomial present in some basis");
  query->add_option("--dataset", dataset, "Data set encoding");
  query->add_option("--classlabel", classlabel, "Class label");
  query->add_flag("--representatives-only", reps_only, "Only class representatives");
  query->add_option("--min-bases", min_bases, "Minimum number of model bases");
  query->add_option("--max-bases", max_bases, "Maximum number of model bases");
  add_catalog_dir(query, dir);
  add_format(query, format);
  query->callback([&] {
    action = [&] {
      QueryFilter filter;
      filter.m = m;
      if (!monomial.empty()) filter.contains_monomial = parse_monomial(monomial, layer.n);
      if (!dataset.empty()) filter.dataset = parse_dataset(dataset, FieldSpec(layer.p), layer.n);
      if (!classlabel.empty()) filter.classlabel = classlabel;
      filter.representatives_only = reps_only;
      filter.min_bases = min_bases;
      filter.max_bases = max_bases;
      return runner.query(layer, dir, filter, format);
    };
  });

  auto* summary = app.add_subcommand("summary", "Class summary of one layer");
  std::size_t summary_m = 0;
  add_layer(summary, layer);
  summary->add_option("--m", summary_m, "Number of points")->required();
  add_catalog_dir(summary, dir);
  add_format(summary, format);
  summary->callback([&] { action = [&] { return runner.summary(layer, summary_m, dir, format); }; });

  auto* whatif = app.add_subcommand("whatif", "Effect of adding one point to a data set");
  std::string point;
  add_layer(whatif, layer);
  whatif->add_option("--dataset", dataset, "Data set encoding")->required();
  whatif->add_option("--add-point", point, "Point to add")->required();
  add_catalog_dir(whatif, dir);
  add_format(whatif, format);
  whatif->callback([&] { action = [&] { return runner.whatif(layer, dataset, point, dir, format); }; });

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis for one term order");
  std::string order;
  add_layer(gb, layer);
  gb->add_option("--dataset", dataset, "Data set encoding")->required();
  gb->add_option("--order", order, "Term order, e.g. lex:x1>x2 or w:3,1|lex:x1>x2")->required();
  add_format(gb, format);
  gb->callback([&] { action = [&] { return runner.gb(layer, dataset, order, format); }; });

  auto* bases = app.add_subcommand("bases", "All model bases of a data set");
  add_layer(bases, layer);
  bases->add_option("--dataset", dataset, "Data set encoding")->required();
  add_format(bases, format);
  bases->callback([&] { action = [&] { return runner.bases(layer, dataset, format); }; });

  auto* fit = app.add_subcommand("fit", "Minimal model supported on a basis");
  std::string outputs;
  std::string basis;
  add_layer(fit, layer);
  fit->add_option("--dataset", dataset, "Data set encoding")->required();
  fit->add_option("--outputs", outputs, "Comma-separated outputs in point order")->required();
  fit->add_option("--basis", basis, "Model basis, e.g. {1,x2}")->required();
  add_format(fit, format);
  fit->callback([&] {
    action = [&] { return runner.fit(layer, dataset, outputs, basis, format); };
  });

  auto* verify = app.add_subcommand("verify", "Check the structural theorems on a layer");
  std::optional<std::size_t> verify_m;
  bool build_fresh = false;
  add_layer(verify, layer);
  verify->add_option("--m", verify_m, "Single layer size");
  verify->add_flag("--build", build_fresh, "Build in memory instead of loading");
  add_catalog_dir(verify, dir);
  add_format(verify, format);
  verify->callback([&] {
    action = [&] { return runner.verify(layer, verify_m, dir, build_fresh, format); };
  });

  std::vector<std::string> argv_storage{"doems"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    return action();
  } catch (const InternalInconsistency& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace doems
