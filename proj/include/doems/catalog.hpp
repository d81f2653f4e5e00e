#pragma once
// The annotated catalog: every data set of a (p, n) layer with its class,
// representative flag and model bases; summaries, queries, what-if analysis,
// theorem checks and the line-delimited store.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "doems/bases.hpp"
#include "doems/shifts.hpp"

namespace doems {

struct CatalogRecord {
  DataSet dataset;
  std::string classlabel;
  bool is_representative = false;
  std::vector<ModelBasis> bases;
  std::vector<std::vector<Monomial>> lt_generators;    // corners, per basis
  std::vector<std::vector<std::string>> groebner_bases;  // marked polynomials, per basis

  unsigned p() const noexcept { return dataset.p(); }
  std::size_t n() const noexcept { return dataset.dim(); }
  std::size_t m() const noexcept { return dataset.size(); }
  std::size_t num_bases() const noexcept { return bases.size(); }
  bool has_monomial(const Monomial& mono) const;

  friend bool operator==(const CatalogRecord&, const CatalogRecord&) = default;
};

// Record for one data set, with the bases computed from scratch.
CatalogRecord annotate(const DataSet& data, std::string classlabel, bool is_representative);

inline constexpr std::pair<unsigned, std::size_t> kDefaultLayers[] = {
    {2, 2}, {2, 3}, {2, 4}, {3, 2}};

bool is_default_layer(unsigned p, std::size_t n);

struct BuildOptions {
  bool allow_unsupported = false;  // permit (p, n) outside kDefaultLayers
  std::ostream* log = nullptr;
};

class Catalog {
 public:
  Catalog(unsigned p, std::size_t n, std::vector<CatalogRecord> records);

  unsigned p() const noexcept { return p_; }
  std::size_t n() const noexcept { return n_; }
  // Ordered by m, then by data set.
  const std::vector<CatalogRecord>& records() const noexcept { return records_; }
  std::vector<std::size_t> layer_sizes() const;
  bool has_layer(std::size_t m) const;
  std::vector<const CatalogRecord*> layer(std::size_t m) const;
  const CatalogRecord* find(const DataSet& data) const;
  // Identifiable order ideals rejected as unrealizable during the build.
  std::size_t unrealizable_count() const noexcept { return unrealizable_; }
  void set_unrealizable_count(std::size_t count) noexcept { unrealizable_ = count; }

  friend bool operator==(const Catalog& a, const Catalog& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.records_ == b.records_;
  }

 private:
  unsigned p_;
  std::size_t n_;
  std::vector<CatalogRecord> records_;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> layers_;  // m -> [begin, end)
  std::size_t unrealizable_ = 0;
};

std::vector<CatalogRecord> build_layer(unsigned p, std::size_t n, std::size_t m,
                                       const BuildOptions& options = {});
Catalog build_catalog(unsigned p, std::size_t n, const BuildOptions& options = {});

struct QueryFilter {
  std::optional<std::size_t> m;
  std::optional<Monomial> contains_monomial;
  std::optional<DataSet> dataset;
  std::optional<std::string> classlabel;
  bool representatives_only = false;
  std::optional<std::size_t> min_bases;
  std::optional<std::size_t> max_bases;
};

std::vector<CatalogRecord> query(const Catalog& catalog, const QueryFilter& filter);

struct ClassSummary {
  std::string classlabel;
  std::size_t size = 0;
  std::size_t num_bases = 0;
  DataSet representative;
  std::vector<ModelBasis> bases;
};

struct SummaryStats {
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<ClassSummary> classes;  // ordered by label index
  std::size_t total_sets = 0;
  std::size_t min_bases = 0;
  std::size_t max_bases = 0;
};

// Groups records by class label; throws NotFound for an empty selection.
SummaryStats summarize(const std::vector<CatalogRecord>& records);
SummaryStats class_summary(const Catalog& catalog, std::size_t m);

struct WhatIfResult {
  CatalogRecord base;
  CatalogRecord augmented;
  // Monomials of the augmented bases that occur in no basis of the original set.
  std::vector<Monomial> new_monomials;
};

// Both records are computed from scratch; class labels come from the catalog
// when one is supplied, otherwise from a fresh partition of the layer.
WhatIfResult whatif_add_point(const DataSet& data, const Point& x,
                              const Catalog* catalog = nullptr);

struct Check {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerificationReport {
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Check> checks;

  bool passed() const;
};

VerificationReport verify_theorems(const Catalog& catalog, std::size_t m);

// Line-delimited store: a header line with schema version, parameters,
// record count and CRC-32 of the record lines, then one record per line.
inline constexpr int kSchemaVersion = 1;

std::string record_to_line(const CatalogRecord& record);
CatalogRecord record_from_line(std::string_view line);

void export_catalog(const Catalog& catalog, std::ostream& out);
Catalog import_catalog(std::istream& in);
void export_catalog(const Catalog& catalog, const std::filesystem::path& file);
Catalog import_catalog(const std::filesystem::path& file);

// DOEMS_CATALOG_DIR, or "catalog" under the working directory.
std::filesystem::path default_catalog_dir();
std::filesystem::path catalog_file(const std::filesystem::path& dir, unsigned p, std::size_t n);
// Throws NotFound when the layer file is absent.
Catalog load_catalog(const std::filesystem::path& dir, unsigned p, std::size_t n);

}  // namespace doems
