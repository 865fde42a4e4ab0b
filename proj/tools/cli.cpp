#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ers/affine_quotient.hpp"
#include "ers/classifier_search.hpp"
#include "ers/descriptor.hpp"
#include "ers/error.hpp"
#include "ers/ers_catalog.hpp"
#include "ers/isomorphy.hpp"

namespace ers::cli {

namespace {

enum class Format { kMd, kJson, kCsv };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_table(const Table& t, Format format, std::ostream& out) {
  if (format == Format::kCsv) {
    auto line = [&out](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << csv_field(cells[i]);
      out << "\n";
    };
    line(t.header);
    for (const auto& row : t.rows) line(row);
    return;
  }
  auto line = [&out](const std::vector<std::string>& cells) {
    out << "|";
    for (const std::string& c : cells) out << " " << c << " |";
    out << "\n";
  };
  line(t.header);
  out << "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : t.rows) line(row);
}

std::string tiers(const MarkedErs& r) {
  std::optional<TierNumbers> t = tier_numbers(r);
  if (!t) return "non-classical";
  return "(" + std::to_string(t->t1) + "," + std::to_string(t->t2) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

MarkedErs read_descriptor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open descriptor file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed descriptor '" + path + "': " + e.what());
  }
  return ers_from_json(j);
}

std::vector<MarkedErs> catalog_for(int rank, const std::string& filter) {
  if (filter == "all") return catalog(rank, CatalogFilter::kAll);
  if (filter == "reduced") return catalog(rank, CatalogFilter::kReduced);
  if (filter == "non-reduced") return catalog(rank, CatalogFilter::kNonReduced);
  throw InputError("unknown filter '" + filter + "' (use non-reduced, reduced or all)");
}

// Flags shared across subcommands.
struct Options {
  std::string format = "md";
  int rank = 2;
  std::string type;
  std::string file;
  bool all = false;
  std::optional<int> oracle;
  std::optional<int> window;
  bool verify_paper = false;
  std::string group = "unmarked";
  std::string filter;
  int modulus = 4;
  bool guided = false;
  int threads = 1;
  std::string output;
};

Format parse_format(const std::string& s) {
  if (s == "md") return Format::kMd;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  throw InputError("unknown format '" + s + "'");
}

int cmd_list(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  std::vector<MarkedErs> entries = catalog_for(o.rank, o.filter.empty() ? "all" : o.filter);
  if (f == Format::kJson) {
    Json arr = Json::array();
    for (const MarkedErs& r : entries) {
      const TypeInfo& info = type_info(r.name());
      std::optional<TierNumbers> t = tier_numbers(r);
      Json tj = t ? Json{t->t1, t->t2} : Json(nullptr);
      arr.push_back({{"name", r.name()},
                     {"display", std::string(info.display)},
                     {"quotient", std::string(to_string(identify_affine_type(quotient(r))))},
                     {"reduced", is_reduced(r)},
                     {"tiers", tj}});
    }
    out << arr.dump(2) << "\n";
    return kOk;
  }
  Table t{{"name", "display", "quotient", "reduced", "tiers"}, {}};
  for (const MarkedErs& r : entries) {
    const TypeInfo& info = type_info(r.name());
    t.rows.push_back({r.name(), std::string(info.display),
                      std::string(to_string(identify_affine_type(quotient(r)))),
                      yes_no(is_reduced(r)), tiers(r)});
  }
  print_table(t, f, out);
  if (f == Format::kMd) out << "\n" << entries.size() << " entries at rank " << o.rank << "\n";
  return kOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  if (o.all) {
    if (!o.type.empty()) throw InputError("build takes --type or --all, not both");
    if (f != Format::kJson) throw InputError("build --all supports --format json only");
    Json arr = Json::array();
    for (const MarkedErs& r : catalog(o.rank)) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
    return kOk;
  }
  if (o.type.empty()) throw InputError("build needs --type or --all");
  MarkedErs r = build(o.type, o.rank);
  std::vector<std::vector<std::int64_t>> roots;
  if (o.window) {
    if (*o.window < 0) throw InputError("--window must be >= 0");
    roots = roots_in_window(r, *o.window);
  }
  if (f == Format::kJson) {
    Json j = to_json(r);
    if (o.window) {
      j["window"] = *o.window;
      j["roots"] = roots;
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  Table t{{"class", "translation"}, {}};
  for (LengthClass c : kLengthClasses) {
    const ResidueSet& s = r.translation(c);
    t.rows.push_back({std::string(to_string(c)), s.empty() ? "-" : s.to_string()});
  }
  if (f == Format::kMd) out << r.name() << " at rank " << r.rank() << "\n\n";
  print_table(t, f, out);
  if (o.window && f == Format::kMd) {
    out << "\n" << roots.size() << " roots with |m|, |n| <= " << *o.window << "\n";
    for (const auto& v : roots) {
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
      out << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  int chosen = (o.all ? 1 : 0) + (o.type.empty() ? 0 : 1) + (o.file.empty() ? 0 : 1);
  if (chosen != 1) throw InputError("verify needs exactly one of --type, --all, --file");
  if (o.oracle && *o.oracle < 2) throw InputError("--oracle window must be >= 2");
  std::vector<MarkedErs> entries;
  if (o.all) {
    entries = catalog(o.rank);
  } else if (!o.type.empty()) {
    entries.push_back(build(o.type, o.rank));
  } else {
    entries.push_back(read_descriptor(o.file));
  }

  int failures = 0;
  Json arr = Json::array();
  Table t{{"name", "rank", "symbolic", "windowed", "agree", "details"}, {}};
  for (const MarkedErs& r : entries) {
    AxiomReport symbolic = check_axioms_symbolic(r);
    std::optional<AxiomReport> windowed;
    if (o.oracle) windowed = check_axioms_windowed(r, *o.oracle);
    bool agree = !windowed || windowed->passed() == symbolic.passed();
    bool ok = symbolic.passed() && agree && (!windowed || windowed->passed());
    if (!ok) ++failures;
    Json j = {{"name", r.name()}, {"rank", r.rank()}, {"symbolic", to_json(symbolic)}};
    if (windowed) {
      j["windowed"] = to_json(*windowed);
      j["window"] = *o.oracle;
      j["agree"] = agree;
    }
    arr.push_back(j);
    t.rows.push_back({r.name(), std::to_string(r.rank()), symbolic.passed() ? "pass" : "FAIL",
                      windowed ? (windowed->passed() ? "pass" : "FAIL") : "-",
                      windowed ? yes_no(agree) : "-", symbolic.summary()});
  }
  int verified = static_cast<int>(entries.size()) - failures;
  if (f == Format::kJson) {
    out << Json{{"entries", arr}, {"verified", verified}, {"total", entries.size()}}.dump(2)
        << "\n";
  } else {
    print_table(t, f, out);
    if (f == Format::kMd) {
      out << "\n" << verified << " entries verified";
      if (failures) out << ", " << failures << " failed";
      out << "\n";
    }
  }
  return failures == 0 ? kOk : kCheckFailed;
}

int cmd_quotient(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  if (o.type.empty() == o.file.empty()) throw InputError("quotient needs one of --type, --file");
  MarkedErs r = o.type.empty() ? read_descriptor(o.file) : build(o.type, o.rank);
  AffineProfile p = quotient(r);
  if (f == Format::kJson) {
    Json j = to_json(p);
    j["name"] = r.name();
    out << j.dump(2) << "\n";
    return kOk;
  }
  Table t{{"name", "profile", "type", "non-reduced"},
          {{r.name(), to_string(p), std::string(to_string(identify_affine_type(p))),
            yes_no(is_quotient_non_reduced(p))}}};
  print_table(t, f, out);
  return kOk;
}

int cmd_iso(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  if (!o.verify_paper) throw InputError("iso needs --verify-paper");
  IsoReport report = verify_listed_isomorphisms(o.rank);
  std::string tally =
      std::to_string(report.verified_count()) + "/" + std::to_string(report.checks.size());
  if (f == Format::kJson) {
    out << to_json(report).dump(2) << "\n";
  } else {
    Table t{{"lhs", "rhs", "map", "verified", "detail"}, {}};
    for (const IsoCheck& c : report.checks) {
      t.rows.push_back({c.entry.lhs, c.entry.rhs, c.entry.via, yes_no(c.verified), c.detail});
    }
    print_table(t, f, out);
    if (f == Format::kMd) out << "\n" << tally << " verified\n";
  }
  return report.all_verified() ? kOk : kCheckFailed;
}

int cmd_dedup(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  IsoGroupSpec group;
  if (o.group == "marked") {
    group.kind = IsoGroupKind::kMarked;
  } else if (o.group != "unmarked") {
    throw InputError("unknown group '" + o.group + "' (use marked or unmarked)");
  }
  group.modulus = o.modulus;
  std::vector<MarkedErs> entries = catalog_for(o.rank, o.filter.empty() ? "non-reduced" : o.filter);
  std::vector<IsoClass> classes = dedup(entries, group);
  if (f == Format::kJson) {
    Json arr = Json::array();
    for (const IsoClass& c : classes) arr.push_back(to_json(c));
    out << Json{{"rank", o.rank}, {"group", o.group}, {"count", classes.size()}, {"classes", arr}}
               .dump(2)
        << "\n";
    return kOk;
  }
  Table t{{"class", "members", "key"}, {}};
  for (std::size_t i = 0; i < classes.size(); ++i) {
    std::string members;
    for (const MarkedErs& r : classes[i].members) members += (members.empty() ? "" : " ") + r.name();
    t.rows.push_back({std::to_string(i + 1), members, classes[i].key});
  }
  print_table(t, f, out);
  if (f == Format::kMd) out << "\n" << classes.size() << " classes\n";
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  Format f = parse_format(o.format);
  SearchConfig config;
  config.rank = o.rank;
  config.modulus = o.modulus;
  config.filter = parse_search_filter(o.filter.empty() ? "non-reduced" : o.filter);
  config.middle_mode = o.guided ? MiddleMode::kGuided : MiddleMode::kFull;
  config.threads = o.threads;
  SearchResult result = search(config);

  IsoGroupSpec group{IsoGroupKind::kMarked, config.modulus};
  std::vector<MarkedErs> expected;
  if (config.filter == SearchFilter::kNonReduced) {
    expected = catalog(o.rank, CatalogFilter::kNonReduced);
  } else if (config.filter == SearchFilter::kReducedNonReducedQuotient) {
    expected = catalog(o.rank, CatalogFilter::kReduced);
  } else {
    expected = catalog(o.rank, CatalogFilter::kAll);
  }
  MatchReport match = match_report(result.classes, expected, group);

  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw InputError("cannot write '" + o.output + "'");
    Json arr = Json::array();
    for (const FoundClass& c : result.classes) arr.push_back(to_json(c.representative));
    file << arr.dump(2) << "\n";
  }

  if (f == Format::kJson) {
    Json classes = Json::array();
    for (const FoundClass& c : result.classes) {
      Json j = to_json(c.representative);
      j["key"] = c.key;
      classes.push_back(j);
    }
    const SearchStats& s = result.stats;
    out << Json{{"rank", o.rank},
                {"modulus", config.modulus},
                {"filter", std::string(to_string(config.filter))},
                {"guided", o.guided},
                {"count", result.classes.size()},
                {"stats",
                 {{"candidates", s.candidates},
                  {"combinations", s.combinations},
                  {"closed", s.closed},
                  {"systems", s.systems},
                  {"kept", s.kept}}},
                {"classes", classes},
                {"match",
                 {{"bijection", match.bijection()},
                  {"extra", match.extra},
                  {"missing", match.missing},
                  {"collisions", match.collisions}}}}
               .dump(2)
        << "\n";
  } else {
    Table t{{"name", "quotient", "reduced", "tiers", "key"}, {}};
    for (const FoundClass& c : result.classes) {
      const MarkedErs& r = c.representative;
      t.rows.push_back({c.catalog_name.empty() ? "(unmatched)" : c.catalog_name,
                        std::string(to_string(identify_affine_type(quotient(r)))),
                        yes_no(is_reduced(r)), tiers(r), c.key});
    }
    print_table(t, f, out);
    if (f == Format::kMd) {
      out << "\n" << result.classes.size() << " classes; catalog match: "
          << (match.bijection() ? "bijection" : "mismatch") << "\n";
      for (const auto& k : match.extra) out << "extra: " << k << "\n";
      for (const auto& n : match.missing) out << "missing: " << n << "\n";
      for (const auto& n : match.collisions) out << "collision: " << n << "\n";
    }
  }
  if (config.filter == SearchFilter::kAll) return kOk;
  return match.bijection() ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marked elliptic root systems of BC shape", "ers"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool with_type) {
    sub->add_option("--format", o.format, "md, json or csv")->check(CLI::IsMember({"md", "json", "csv"}));
    sub->add_option("--rank", o.rank, "rank l >= 1")->check(CLI::Range(1, 16));
    if (with_type) sub->add_option("--type", o.type, "catalog label, e.g. CvC(2)*1'");
  };

  CLI::App* list = app.add_subcommand("list", "catalog table");
  add_common(list, false);
  list->add_option("--filter", o.filter, "all, reduced or non-reduced");

  CLI::App* build_cmd = app.add_subcommand("build", "emit a descriptor");
  add_common(build_cmd, true);
  build_cmd->add_option("--window", o.window, "also list roots with |m|, |n| <= B");
  build_cmd->add_flag("--all", o.all, "every catalog entry at the rank, as a JSON array");

  CLI::App* verify = app.add_subcommand("verify", "check the axioms");
  add_common(verify, true);
  verify->add_flag("--all", o.all, "every catalog entry at the rank");
  verify->add_option("--file", o.file, "descriptor JSON file");
  verify->add_option("--oracle", o.oracle, "also run the windowed check with this bound");

  CLI::App* quot = app.add_subcommand("quotient", "affine quotient profile and type");
  add_common(quot, true);
  quot->add_option("--file", o.file, "descriptor JSON file");

  CLI::App* iso = app.add_subcommand("iso", "listed isomorphisms");
  add_common(iso, false);
  iso->add_flag("--verify-paper", o.verify_paper, "verify the fourteen listed isomorphisms");

  CLI::App* dd = app.add_subcommand("dedup", "isomorphism classes of the catalog");
  add_common(dd, false);
  dd->add_option("--group", o.group, "marked or unmarked");
  dd->add_option("--filter", o.filter, "non-reduced (default), reduced or all");
  dd->add_option("--modulus", o.modulus, "working modulus")->check(CLI::IsMember({4, 8}));

  CLI::App* cls = app.add_subcommand("classify", "exhaustive search and catalog match");
  add_common(cls, false);
  cls->add_flag("--guided", o.guided, "restrict middle sets to the catalog forms");
  cls->add_option("--filter", o.filter, "non-reduced (default), reduced or all");
  cls->add_option("--modulus", o.modulus, "2, 4 or 8")->check(CLI::IsMember({2, 4, 8}));
  cls->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1, 256));
  cls->add_option("--output", o.output, "write found descriptors as a JSON array");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (list->parsed()) return cmd_list(o, out);
    if (build_cmd->parsed()) return cmd_build(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (quot->parsed()) return cmd_quotient(o, out);
    if (iso->parsed()) return cmd_iso(o, out);
    if (dd->parsed()) return cmd_dedup(o, out);
    if (cls->parsed()) return cmd_classify(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const SearchLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ers::cli
