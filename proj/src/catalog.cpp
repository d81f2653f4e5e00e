#include "doems/catalog.hpp"

#include <zlib.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "doems/errors.hpp"
#include "doems/json_io.hpp"
#include "doems/radical.hpp"

namespace doems {

bool CatalogRecord::has_monomial(const Monomial& mono) const {
  return std::any_of(bases.begin(), bases.end(),
                     [&](const ModelBasis& b) { return b.contains(mono); });
}

namespace {

CatalogRecord annotate_counting(const DataSet& data, std::string classlabel,
                                bool is_representative, std::vector<ModelBasis>* unrealizable) {
  BasisSearch search = search_model_bases(data);
  CatalogRecord record{data, std::move(classlabel), is_representative, {}, {}, {}};
  for (BasisAnnotation& ann : search.bases) {
    std::vector<std::string> gb;
    for (const MarkedPolynomial& g : ann.gb) gb.push_back(to_string(g));
    record.bases.push_back(std::move(ann.basis));
    record.lt_generators.push_back(std::move(ann.corners));
    record.groebner_bases.push_back(std::move(gb));
  }
  if (unrealizable) *unrealizable = std::move(search.unrealizable);
  return record;
}

std::size_t label_index(const std::string& label) {
  const auto pos = label.rfind("-c");
  if (pos == std::string::npos) return 0;
  return static_cast<std::size_t>(std::strtoul(label.c_str() + pos + 2, nullptr, 10));
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  while (exp--) out *= base;
  return out;
}

}  // namespace

CatalogRecord annotate(const DataSet& data, std::string classlabel, bool is_representative) {
  return annotate_counting(data, std::move(classlabel), is_representative, nullptr);
}

bool is_default_layer(unsigned p, std::size_t n) {
  return std::any_of(std::begin(kDefaultLayers), std::end(kDefaultLayers),
                     [&](const auto& layer) { return layer.first == p && layer.second == n; });
}

Catalog::Catalog(unsigned p, std::size_t n, std::vector<CatalogRecord> records)
    : p_(p), n_(n), records_(std::move(records)) {
  for (const CatalogRecord& r : records_) {
    if (r.p() != p_ || r.n() != n_) {
      throw InvalidArgument("record " + to_string(r.dataset) + " does not belong to layer p=" +
                            std::to_string(p_) + " n=" + std::to_string(n_));
    }
  }
  std::stable_sort(records_.begin(), records_.end(), [](const auto& a, const auto& b) {
    if (a.m() != b.m()) return a.m() < b.m();
    return a.dataset < b.dataset;
  });
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (i > 0 && records_[i].dataset == records_[i - 1].dataset) {
      throw InvalidArgument("duplicate record for " + to_string(records_[i].dataset));
    }
    auto [it, inserted] = layers_.try_emplace(records_[i].m(), i, i + 1);
    if (!inserted) it->second.second = i + 1;
  }
}

std::vector<std::size_t> Catalog::layer_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& [m, range] : layers_) out.push_back(m);
  return out;
}

bool Catalog::has_layer(std::size_t m) const { return layers_.contains(m); }

std::vector<const CatalogRecord*> Catalog::layer(std::size_t m) const {
  std::vector<const CatalogRecord*> out;
  const auto it = layers_.find(m);
  if (it == layers_.end()) return out;
  for (std::size_t i = it->second.first; i < it->second.second; ++i) out.push_back(&records_[i]);
  return out;
}

const CatalogRecord* Catalog::find(const DataSet& data) const {
  if (data.p() != p_ || data.dim() != n_) return nullptr;
  const auto it = layers_.find(data.size());
  if (it == layers_.end()) return nullptr;
  const auto first = records_.begin() + static_cast<std::ptrdiff_t>(it->second.first);
  const auto last = records_.begin() + static_cast<std::ptrdiff_t>(it->second.second);
  const auto pos = std::lower_bound(first, last, data,
                                    [](const CatalogRecord& r, const DataSet& d) {
                                      return r.dataset < d;
                                    });
  if (pos == last || !(pos->dataset == data)) return nullptr;
  return &*pos;
}

namespace {

std::vector<CatalogRecord> build_layer_counting(unsigned p, std::size_t n, std::size_t m,
                                                const BuildOptions& options,
                                                std::size_t& unrealizable_total) {
  std::vector<CatalogRecord> records;
  std::size_t unrealizable_classes = 0;
  for (const EquivalenceClass& cls : partition_all(p, n, m)) {
    for (const DataSet& member : cls.members) {
      const bool is_rep = member == cls.representative;
      std::vector<ModelBasis> unrealizable;
      records.push_back(annotate_counting(member, cls.label, is_rep, &unrealizable));
      if (is_rep && !unrealizable.empty()) {
        ++unrealizable_classes;
        unrealizable_total += unrealizable.size();
        if (options.log) {
          for (const ModelBasis& b : unrealizable) {
            *options.log << "unrealizable identifiable order ideal " << to_string(b) << " for "
                         << cls.label << " representative " << to_string(member) << '\n';
          }
        }
      }
    }
  }
  std::sort(records.begin(), records.end(),
            [](const auto& a, const auto& b) { return a.dataset < b.dataset; });
  if (options.log) {
    *options.log << "layer p=" << p << " n=" << n << " m=" << m << ": " << records.size()
                 << " records";
    if (unrealizable_classes) {
      *options.log << ", " << unrealizable_classes << " classes with unrealizable order ideals";
    }
    *options.log << '\n';
  }
  return records;
}

}  // namespace

std::vector<CatalogRecord> build_layer(unsigned p, std::size_t n, std::size_t m,
                                       const BuildOptions& options) {
  std::size_t unrealizable = 0;
  return build_layer_counting(p, n, m, options, unrealizable);
}

Catalog build_catalog(unsigned p, std::size_t n, const BuildOptions& options) {
  if (!is_default_layer(p, n) && !options.allow_unsupported) {
    throw UnsupportedParameters("layer p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                " is outside the default catalog; pass the override flag");
  }
  const FieldSpec field(p);
  const std::size_t total = Grid(field, n).size();
  std::vector<CatalogRecord> records;
  std::size_t unrealizable = 0;
  for (std::size_t m = 1; m <= total; ++m) {
    for (CatalogRecord& r : build_layer_counting(p, n, m, options, unrealizable)) {
      records.push_back(std::move(r));
    }
  }
  Catalog catalog(p, n, std::move(records));
  catalog.set_unrealizable_count(unrealizable);
  return catalog;
}

std::vector<CatalogRecord> query(const Catalog& catalog, const QueryFilter& filter) {
  std::vector<CatalogRecord> out;
  for (const CatalogRecord& r : catalog.records()) {
    if (filter.m && r.m() != *filter.m) continue;
    if (filter.dataset && !(r.dataset == *filter.dataset)) continue;
    if (filter.classlabel && r.classlabel != *filter.classlabel) continue;
    if (filter.representatives_only && !r.is_representative) continue;
    if (filter.min_bases && r.num_bases() < *filter.min_bases) continue;
    if (filter.max_bases && r.num_bases() > *filter.max_bases) continue;
    if (filter.contains_monomial) {
      if (filter.contains_monomial->dim() != catalog.n()) {
        throw InvalidArgument("monomial dimension does not match the catalog");
      }
      if (!r.has_monomial(*filter.contains_monomial)) continue;
    }
    out.push_back(r);
  }
  return out;
}

SummaryStats summarize(const std::vector<CatalogRecord>& records) {
  if (records.empty()) throw NotFound("no records to summarise");
  SummaryStats stats;
  stats.p = records.front().p();
  stats.n = records.front().n();
  stats.m = records.front().m();
  std::map<std::pair<std::size_t, std::string>, std::size_t> slot;
  for (const CatalogRecord& r : records) {
    const auto key = std::make_pair(label_index(r.classlabel), r.classlabel);
    auto it = slot.find(key);
    if (it == slot.end()) {
      it = slot.emplace(key, stats.classes.size()).first;
      stats.classes.push_back(ClassSummary{r.classlabel, 0, r.num_bases(), r.dataset, r.bases});
    }
    ClassSummary& cls = stats.classes[it->second];
    ++cls.size;
    if (r.is_representative) {
      cls.representative = r.dataset;
      cls.bases = r.bases;
      cls.num_bases = r.num_bases();
    }
    ++stats.total_sets;
  }
  std::vector<ClassSummary> ordered;
  for (const auto& [key, idx] : slot) ordered.push_back(std::move(stats.classes[idx]));
  stats.classes = std::move(ordered);
  stats.min_bases = stats.max_bases = stats.classes.front().num_bases;
  for (const ClassSummary& cls : stats.classes) {
    stats.min_bases = std::min(stats.min_bases, cls.num_bases);
    stats.max_bases = std::max(stats.max_bases, cls.num_bases);
  }
  return stats;
}

SummaryStats class_summary(const Catalog& catalog, std::size_t m) {
  if (!catalog.has_layer(m)) {
    throw NotFound("layer m=" + std::to_string(m) + " is not in the catalog");
  }
  std::vector<CatalogRecord> records;
  for (const CatalogRecord* r : catalog.layer(m)) records.push_back(*r);
  return summarize(records);
}

namespace {

std::pair<std::string, bool> classify(const DataSet& data, const Catalog* catalog) {
  if (catalog) {
    if (const CatalogRecord* r = catalog->find(data)) return {r->classlabel, r->is_representative};
  }
  for (const EquivalenceClass& cls : partition_all(data.p(), data.dim(), data.size())) {
    if (std::binary_search(cls.members.begin(), cls.members.end(), data)) {
      return {cls.label, cls.representative == data};
    }
  }
  throw InternalInconsistency("data set " + to_string(data) + " lies in no class");
}

CatalogRecord fresh_record(const DataSet& data, const Catalog* catalog) {
  auto [label, is_rep] = classify(data, catalog);
  CatalogRecord record = annotate(data, std::move(label), is_rep);
  if (catalog) {
    const CatalogRecord* stored = catalog->find(data);
    if (stored && !(*stored == record)) {
      throw InternalInconsistency("stored record for " + to_string(data) +
                                  " differs from a fresh computation");
    }
  }
  return record;
}

}  // namespace

WhatIfResult whatif_add_point(const DataSet& data, const Point& x, const Catalog* catalog) {
  if (x.dim() != data.dim()) throw InvalidArgument("point dimension does not match the data set");
  if (data.contains(x)) {
    throw DuplicatePoint("point " + to_string(x) + " is already in " + to_string(data));
  }
  const DataSet augmented = data.with_point(x);
  WhatIfResult result{fresh_record(data, catalog), fresh_record(augmented, catalog), {}};
  std::set<Monomial> before;
  for (const ModelBasis& b : result.base.bases) before.insert(b.monomials.begin(), b.monomials.end());
  std::vector<Monomial> fresh;
  for (const ModelBasis& b : result.augmented.bases) {
    for (const Monomial& mono : b.monomials) {
      if (!before.contains(mono)) fresh.push_back(mono);
    }
  }
  std::sort(fresh.begin(), fresh.end(), basis_order_less);
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  result.new_monomials = std::move(fresh);
  return result;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

class CheckList {
 public:
  explicit CheckList(std::vector<Check>& checks) : checks_(checks) {}

  Check& add(std::string name) {
    checks_.push_back(Check{std::move(name), true, false, {}});
    return checks_.back();
  }
  static void fail(Check& check, const std::string& detail) {
    if (check.passed) check.detail = detail;
    check.passed = false;
  }

 private:
  std::vector<Check>& checks_;
};

}  // namespace

VerificationReport verify_theorems(const Catalog& catalog, std::size_t m) {
  const auto records = catalog.layer(m);
  if (records.empty()) throw NotFound("layer m=" + std::to_string(m) + " is not in the catalog");
  const unsigned p = catalog.p();
  const std::size_t n = catalog.n();
  const std::uint64_t total = ipow(p, n);
  const std::uint64_t sets = binomial(total, m);
  VerificationReport report{p, n, m, {}};
  CheckList list(report.checks);

  std::map<std::string, std::vector<const CatalogRecord*>> classes;
  for (const CatalogRecord* r : records) classes[r->classlabel].push_back(r);

  Check& partition = list.add("classes partition all m-subsets");
  if (records.size() != sets) {
    CheckList::fail(partition, std::to_string(records.size()) + " records, expected " +
                                   std::to_string(sets));
  }
  Check& orbits = list.add("class members form one shift orbit");
  Check& reps = list.add("representative has minimal set distance");
  Check& ps = list.add("class sizes divisible by p^s");
  Check& pn = list.add("class sizes divisible by p^n when p does not divide m");
  if (m % p == 0) {
    pn.skipped = true;
    pn.detail = "p divides m";
  }
  Check& tfae = list.add("all r_i = 0 exactly when m = p^n");
  Check& stairs = list.add("at most one staircase per class, and it is the representative");
  Check& powers = list.add("column distinct counts are powers of p with equal repetition");
  Check& columns = list.add("columns identical or disjoint");
  Check& invariance = list.add("basis lists identical within each class");
  Check& identifiable = list.add("every basis is an identifiable order ideal of size m");

  for (const auto& [label, members] : classes) {
    std::vector<DataSet> sorted;
    for (const CatalogRecord* r : members) sorted.push_back(r->dataset);
    std::sort(sorted.begin(), sorted.end());
    const std::size_t rep_count = static_cast<std::size_t>(std::count_if(
        members.begin(), members.end(), [](const CatalogRecord* r) { return r->is_representative; }));
    const CatalogRecord* rep = nullptr;
    for (const CatalogRecord* r : members) {
      if (r->is_representative) rep = r;
    }
    if (rep_count != 1 || !rep) {
      CheckList::fail(reps, label + " has " + std::to_string(rep_count) + " representatives");
      continue;
    }
    if (enumerate_class(rep->dataset).members != sorted) {
      CheckList::fail(orbits, label + " is not the orbit of its representative");
    }
    if (!(find_representative(sorted) == rep->dataset)) {
      CheckList::fail(reps, label + " representative is not distance-minimal");
    }

    try {
      const ShiftMatrixStats stats = column_stats(shift_matrix(rep->dataset));
      const std::uint64_t ps_factor = ipow(p, stats.min_exponent);
      if (members.size() % ps_factor != 0) {
        CheckList::fail(ps, label + " size " + std::to_string(members.size()) +
                                " not divisible by " + std::to_string(ps_factor));
      }
      const bool all_zero = std::all_of(stats.columns.begin(), stats.columns.end(),
                                        [](const ColumnStats& c) { return c.exponent == 0; });
      if (all_zero != (m == total)) CheckList::fail(tfae, label + " violates the equivalence");
    } catch (const InternalInconsistency& e) {
      CheckList::fail(ps, label + ": " + e.what());
    }
    if (m % p != 0 && members.size() % total != 0) {
      CheckList::fail(pn, label + " size " + std::to_string(members.size()) +
                              " not divisible by " + std::to_string(total));
    }

    std::vector<const DataSet*> staircases;
    for (const DataSet& s : sorted) {
      if (is_staircase(s)) staircases.push_back(&s);
    }
    if (staircases.size() > 1) {
      CheckList::fail(stairs, label + " has " + std::to_string(staircases.size()) + " staircases");
    } else if (staircases.size() == 1) {
      if (!(*staircases.front() == rep->dataset)) {
        CheckList::fail(stairs, label + " staircase is not the representative");
      }
      const RadicalSum best = set_distance(*staircases.front());
      for (const DataSet& s : sorted) {
        if (!(s == *staircases.front()) && radical_compare(set_distance(s), best) <= 0) {
          CheckList::fail(stairs, label + " staircase distance is not strictly minimal");
        }
      }
    }

    for (const CatalogRecord* r : members) {
      if (r->bases != rep->bases) {
        CheckList::fail(invariance, to_string(r->dataset) + " differs from " + label);
      }
      for (const ModelBasis& b : r->bases) {
        if (b.size() != m || !is_order_ideal(b) || !is_identifiable(r->dataset, b.monomials)) {
          CheckList::fail(identifiable, to_string(b) + " for " + to_string(r->dataset));
        }
      }
      const ShiftMatrix matrix = shift_matrix(r->dataset);
      try {
        column_stats(matrix);
      } catch (const InternalInconsistency& e) {
        CheckList::fail(powers, to_string(r->dataset) + ": " + e.what());
      }
      for (std::size_t a = 0; a < matrix.column_count(); ++a) {
        for (std::size_t b = a + 1; b < matrix.column_count(); ++b) {
          if (column_relation(matrix, a, b) == ColumnRelation::overlapping) {
            CheckList::fail(columns, to_string(r->dataset) + " columns " + std::to_string(a) +
                                         " and " + std::to_string(b) + " overlap");
          }
        }
      }
    }
  }

  Check& bound = list.add("class count within the upper bound");
  const std::uint64_t count = classes.size();
  if (m < total) {
    std::uint64_t limit = sets / p;
    if (m % p != 0) limit = sets / total;
    if (count > limit) {
      CheckList::fail(bound, std::to_string(count) + " classes exceed " + std::to_string(limit));
    }
  }
  Check& single = list.add("one class of size one when m = p^n");
  if (m == total) {
    if (count != 1 || records.size() != 1) CheckList::fail(single, "full grid is not alone");
  } else {
    single.skipped = true;
    single.detail = "m < p^n";
  }
  return report;
}

namespace {

std::string crc_hex(std::uint32_t crc) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", crc);
  return buf;
}

}  // namespace

std::string record_to_line(const CatalogRecord& record) { return to_json(record).dump(); }

CatalogRecord record_from_line(std::string_view line) {
  try {
    const ojson j = ojson::parse(line);
    const unsigned p = j.at("p").get<unsigned>();
    const std::size_t n = j.at("n").get<std::size_t>();
    const FieldSpec field(p);
    DataSet data = parse_dataset(j.at("dataset").get<std::string>(), field, n);
    if (data.size() != j.at("m").get<std::size_t>()) throw CorruptStore("m disagrees with dataset");
    CatalogRecord r{std::move(data), j.at("classlabel").get<std::string>(),
                    j.at("is_representative").get<bool>(), {}, {}, {}};
    for (const auto& b : j.at("bases")) r.bases.push_back(parse_model_basis(b.get<std::string>(), n));
    for (const auto& row : j.at("lt_generators")) {
      std::vector<Monomial> corners;
      for (const auto& c : row) corners.push_back(parse_monomial(c.get<std::string>(), n));
      r.lt_generators.push_back(std::move(corners));
    }
    r.groebner_bases = j.at("groebner_bases").get<std::vector<std::vector<std::string>>>();
    const std::size_t count = j.at("num_bases").get<std::size_t>();
    if (count != r.bases.size() || count != r.lt_generators.size() ||
        count != r.groebner_bases.size()) {
      throw CorruptStore("num_bases disagrees with the basis lists");
    }
    return r;
  } catch (const CorruptStore&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptStore(std::string("malformed catalog record: ") + e.what());
  }
}

void export_catalog(const Catalog& catalog, std::ostream& out) {
  std::string body;
  for (const CatalogRecord& r : catalog.records()) {
    body += record_to_line(r);
    body += '\n';
  }
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size())));
  const ojson header{{"schema", "doems-catalog"},
                     {"schema_version", kSchemaVersion},
                     {"p", catalog.p()},
                     {"n", catalog.n()},
                     {"record_count", catalog.records().size()},
                     {"checksum", "crc32:" + crc_hex(crc)}};
  out << header.dump() << '\n' << body;
  if (!out) throw std::runtime_error("failed to write catalog");
}

Catalog import_catalog(std::istream& in) {
  std::string header_line;
  if (!std::getline(in, header_line)) throw CorruptStore("catalog is empty");
  ojson header;
  unsigned p = 0;
  std::size_t n = 0;
  std::size_t count = 0;
  std::string checksum;
  try {
    header = ojson::parse(header_line);
    if (header.at("schema").get<std::string>() != "doems-catalog") {
      throw CorruptStore("not a catalog file");
    }
    if (header.at("schema_version").get<int>() != kSchemaVersion) {
      throw CorruptStore("unsupported schema version");
    }
    p = header.at("p").get<unsigned>();
    n = header.at("n").get<std::size_t>();
    count = header.at("record_count").get<std::size_t>();
    checksum = header.at("checksum").get<std::string>();
  } catch (const CorruptStore&) {
    throw;
  } catch (const std::exception& e) {
    throw CorruptStore(std::string("malformed catalog header: ") + e.what());
  }
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, reinterpret_cast<const Bytef*>(body.data()), static_cast<uInt>(body.size())));
  if (checksum != "crc32:" + crc_hex(crc)) throw CorruptStore("catalog checksum mismatch");
  std::vector<CatalogRecord> records;
  std::istringstream lines(body);
  std::string line;
  while (std::getline(lines, line)) records.push_back(record_from_line(line));
  if (records.size() != count) throw CorruptStore("catalog record count mismatch");
  try {
    return Catalog(p, n, std::move(records));
  } catch (const InvalidArgument& e) {
    throw CorruptStore(e.what());
  }
}

void export_catalog(const Catalog& catalog, const std::filesystem::path& file) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    export_catalog(catalog, out);
  }
  std::filesystem::rename(tmp, file);
}

Catalog import_catalog(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw NotFound("catalog file " + file.string() + " not found");
  return import_catalog(in);
}

std::filesystem::path default_catalog_dir() {
  if (const char* env = std::getenv("DOEMS_CATALOG_DIR"); env && *env) return env;
  return "catalog";
}

std::filesystem::path catalog_file(const std::filesystem::path& dir, unsigned p, std::size_t n) {
  return dir / ("p" + std::to_string(p) + "n" + std::to_string(n) + ".jsonl");
}

Catalog load_catalog(const std::filesystem::path& dir, unsigned p, std::size_t n) {
  return import_catalog(catalog_file(dir, p, n));
}

}  // namespace doems
