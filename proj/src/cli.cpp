#include "rubric/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "rubric/codec.hpp"
#include "rubric/engine.hpp"
#include "rubric/error.hpp"
#include "rubric/evaluation.hpp"
#include "rubric/interchange.hpp"
#include "rubric/report.hpp"
#include "rubric/sensitivity.hpp"
#include "rubric/service.hpp"
#include "rubric/store.hpp"

namespace rubric::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string env_or(const char* name, std::string fallback) {
  const char* value = std::getenv(name);
  return value && *value ? std::string(value) : std::move(fallback);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path, path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "target=value" pairs from --set.
std::vector<std::pair<std::string, int>> parse_assignments(
    const std::vector<std::string>& items) {
  std::vector<std::pair<std::string, int>> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("expected target=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const int value = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out.emplace_back(item.substr(0, eq), value);
    } catch (const std::logic_error&) {
      throw UsageError("importance in '" + item + "' is not an integer");
    }
  }
  return out;
}

class Commands {
 public:
  Commands(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  void build(CLI::App& app) {
    app.add_option("--store", store_path_, "Store directory (env RUBRIC_STORE)");
    app.add_flag("--json", json_, "Machine-readable JSON output on read commands");
    app.require_subcommand(1);

    add_init(app);
    add_catalog(app);
    add_profile(app);
    add_article(app);
    add_assess(app);
    add_rate(app);
    add_rank(app);
    add_whatif(app);
    add_export(app);
    add_import(app);
    add_demo(app);
    add_serve(app);
    add_meta(app);
  }

  void execute() {
    if (action_) action_();
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  std::string store_path_;
  bool json_ = false;
  std::function<void()> action_;

  // Option storage, one slot per kind of argument.
  std::string id_, target_, value_, name_, catalog_id_ = std::string(kBuiltinCatalogId),
      catalog_version_, file_, kind_ = "ratings", addr_, cors_ = "*", article_, profile_;
  std::string title_, authors_, source_, notes_;
  int year_ = 0;
  std::int64_t revision_ = 0;
  bool scan_ = false;
  bool trace_ = false;
  std::vector<std::string> sets_;

  void on(CLI::App* sub, std::function<void()> fn) {
    sub->callback([this, fn = std::move(fn)] { action_ = fn; });
  }

  std::optional<std::int64_t> revision() const {
    return revision_ > 0 ? std::optional<std::int64_t>(revision_) : std::nullopt;
  }

  Store open_store() const {
    const std::string path = store_path_.empty() ? env_or("RUBRIC_STORE", "") : store_path_;
    if (path.empty()) throw UsageError("no store given: pass --store <dir> or set RUBRIC_STORE");
    return Store::open(path);
  }

  std::string store_dir() const {
    const std::string path = store_path_.empty() ? env_or("RUBRIC_STORE", "") : store_path_;
    if (path.empty()) throw UsageError("no store given: pass --store <dir> or set RUBRIC_STORE");
    return path;
  }

  void emit(const Json& doc) { out_ << doc.dump(2) << "\n"; }

  // ---- init ----
  void add_init(CLI::App& app) {
    auto* sub = app.add_subcommand("init", "Create a store and install the built-in catalog");
    on(sub, [this] {
      const auto store = Store::init(store_dir());
      out_ << "initialized store at " << store.root().string() << "\n";
    });
  }

  // ---- catalog ----
  void add_catalog(CLI::App& app) {
    auto* catalog = app.add_subcommand("catalog", "Criteria catalogs");
    catalog->require_subcommand(1);

    auto* show = catalog->add_subcommand("show", "Print a catalog (default: built-in)");
    show->add_option("id", catalog_id_, "Catalog id");
    show->add_option("--version", catalog_version_, "Catalog version (default latest)");
    on(show, [this] {
      CriteriaCatalog catalog;
      const bool no_store = store_path_.empty() && env_or("RUBRIC_STORE", "").empty();
      if (no_store && catalog_id_ == kBuiltinCatalogId) {
        catalog = builtin_catalog();
      } else {
        const auto store = open_store();
        catalog = catalog_version_.empty()
                      ? store.get_catalog(catalog_id_)
                      : store.get_catalog(CatalogRef{catalog_id_, catalog_version_});
      }
      if (json_) {
        emit(catalog_to_json(catalog));
      } else {
        out_ << report::render_catalog(catalog);
      }
    });

    auto* list = catalog->add_subcommand("list", "List stored catalogs");
    on(list, [this] {
      const auto refs = open_store().list_catalogs();
      if (json_) {
        Json doc = Json::array();
        for (const auto& r : refs) doc.push_back({{"catalog_id", r.catalog_id}, {"version", r.version}});
        emit(doc);
        return;
      }
      for (const auto& r : refs) out_ << r.catalog_id << "@" << r.version << "\n";
    });

    auto* import = catalog->add_subcommand("import", "Store a catalog document");
    import->add_option("file", file_, "Catalog JSON file")->required();
    on(import, [this] {
      auto store = open_store();
      const auto catalog = load_catalog(read_text(file_));
      store.put_catalog(catalog);
      out_ << "stored catalog " << catalog.catalog_id << "@" << catalog.version << "\n";
    });
  }

  // ---- profile ----
  void add_profile(CLI::App& app) {
    auto* profile = app.add_subcommand("profile", "Weight profiles (teaching programs)");
    profile->require_subcommand(1);

    auto* create = profile->add_subcommand("create", "Create a profile with all importances 0");
    create->add_option("id", id_, "Profile id")->required();
    create->add_option("--name", name_, "Display name");
    create->add_option("--catalog", catalog_id_, "Catalog id");
    create->add_option("--catalog-version", catalog_version_, "Catalog version");
    create->add_option("--set", sets_, "Initial importance, target=value (repeatable)");
    on(create, [this] {
      auto store = open_store();
      const auto catalog = catalog_version_.empty()
                               ? store.get_catalog(catalog_id_)
                               : store.get_catalog(CatalogRef{catalog_id_, catalog_version_});
      auto profile = evaluation::make_profile(id_, name_, catalog);
      for (const auto& [target, value] : parse_assignments(sets_))
        profile = evaluation::set_importance(profile, catalog, target, ImportanceRating(value));
      profile.revision = 1;
      store.put_profile(profile);
      out_ << "created profile " << profile.profile_id << " r1\n";
    });

    auto* set = profile->add_subcommand("set-importance",
                                        "Rate a category or criterion 0..5 (new revision)");
    set->add_option("id", id_, "Profile id")->required();
    set->add_option("target", target_, "Category or criterion id")->required();
    set->add_option("value", value_, "Importance 0..5")->required();
    set->add_option("--revision", revision_, "Revision the edit is based on (default latest)");
    on(set, [this] {
      auto store = open_store();
      const auto base = store.get_profile(id_, revision());
      const auto catalog = store.catalog_for(base);
      const auto [target, value] = parse_assignments({target_ + "=" + value_}).front();
      const auto next =
          evaluation::set_importance(base, catalog, target, ImportanceRating(value));
      store.put_profile(next);
      out_ << "profile " << next.profile_id << " r" << next.revision << ": " << target
           << " = " << value << "\n";
    });

    auto* show = profile->add_subcommand("show", "Print a profile");
    show->add_option("id", id_, "Profile id")->required();
    show->add_option("--revision", revision_, "Revision (default latest)");
    on(show, [this] {
      const auto store = open_store();
      const auto p = store.get_profile(id_, revision());
      if (json_) {
        emit(profile_to_json(p));
      } else {
        out_ << report::render_profile(store.catalog_for(p), p);
      }
    });

    auto* weights = profile->add_subcommand("weights", "Normalized category and criterion weights");
    weights->add_option("id", id_, "Profile id")->required();
    weights->add_option("--revision", revision_, "Revision (default latest)");
    on(weights, [this] {
      const auto store = open_store();
      const auto p = store.get_profile(id_, revision());
      const auto catalog = store.catalog_for(p);
      ImportanceMap categories;
      for (const auto& c : catalog.categories) categories[c.id] = p.category(c.id);
      engine::NormalizedWeights category_weights;
      try {
        category_weights = engine::normalize(categories);
      } catch (const Error& e) {
        throw e.with_step(Step::CategoryWeights);
      }
      Json doc = {{"profile_id", p.profile_id}, {"revision", p.revision},
                  {"category_weights", weights_to_json(category_weights)},
                  {"criterion_weights", Json::object()}};
      std::ostringstream text;
      for (const auto& c : catalog.categories) {
        const double cw = category_weights.at(c.id);
        if (cw <= 0.0) continue;
        text << c.id << " " << c.name << ": " << engine::format_percentage(cw) << "\n";
        ImportanceMap criteria;
        for (const auto& k : c.criteria) criteria[k.id] = p.criterion(k.id);
        try {
          const auto w = engine::normalize(criteria);
          doc["criterion_weights"][c.id] = weights_to_json(w);
          for (const auto& k : c.criteria)
            text << "  " << k.id << ": " << engine::format_percentage(w.at(k.id)) << "\n";
        } catch (const Error&) {
          text << "  (no criterion has positive importance)\n";
        }
      }
      if (json_) {
        emit(doc);
      } else {
        out_ << text.str();
      }
    });

    auto* list = profile->add_subcommand("list", "List profiles (latest revisions)");
    on(list, [this] {
      const auto profiles = open_store().list_profiles();
      if (json_) {
        Json doc = Json::array();
        for (const auto& p : profiles) doc.push_back(profile_to_json(p));
        emit(doc);
        return;
      }
      for (const auto& p : profiles)
        out_ << p.profile_id << " r" << p.revision << "  " << p.name << "\n";
    });

    auto* del = profile->add_subcommand("delete", "Delete a profile and all its revisions");
    del->add_option("id", id_, "Profile id")->required();
    on(del, [this] {
      open_store().delete_profile(id_);
      out_ << "deleted profile " << id_ << "\n";
    });
  }

  // ---- article ----
  void add_article_fields(CLI::App* sub) {
    sub->add_option("--title", title_, "Title");
    sub->add_option("--authors", authors_, "Authors");
    sub->add_option("--year", year_, "Publication year");
    sub->add_option("--source", source_, "Journal or venue");
    sub->add_option("--notes", notes_, "Free-form notes");
  }

  void apply_article_fields(ArticleRecord& a) const {
    if (!title_.empty()) a.title = title_;
    if (!authors_.empty()) a.authors = authors_;
    if (year_ != 0) a.year = year_;
    if (!source_.empty()) a.source = source_;
    if (!notes_.empty()) a.notes = notes_;
  }

  void add_article(CLI::App& app) {
    auto* article = app.add_subcommand("article", "Articles under evaluation");
    article->require_subcommand(1);

    auto* add = article->add_subcommand("add", "Register an article");
    add->add_option("id", id_, "Article id")->required();
    add_article_fields(add);
    on(add, [this] {
      ArticleRecord a;
      a.article_id = id_;
      apply_article_fields(a);
      open_store().put_article(a);
      out_ << "added article " << a.article_id << "\n";
    });

    auto* edit = article->add_subcommand("edit", "Update article fields (new revision)");
    edit->add_option("id", id_, "Article id")->required();
    add_article_fields(edit);
    on(edit, [this] {
      auto store = open_store();
      auto a = store.get_article(id_);
      apply_article_fields(a);
      a.revision += 1;
      store.put_article(a);
      out_ << "article " << a.article_id << " r" << a.revision << "\n";
    });

    auto* show = article->add_subcommand("show", "Print an article");
    show->add_option("id", id_, "Article id")->required();
    on(show, [this] {
      const auto a = open_store().get_article(id_);
      if (json_) {
        emit(article_to_json(a));
        return;
      }
      out_ << a.article_id << ": " << a.title << "\n";
      if (a.authors) out_ << "  authors: " << *a.authors << "\n";
      if (a.year) out_ << "  year: " << *a.year << "\n";
      if (a.source) out_ << "  source: " << *a.source << "\n";
      if (a.notes) out_ << "  notes: " << *a.notes << "\n";
    });

    auto* list = article->add_subcommand("list", "List articles");
    on(list, [this] {
      const auto articles = open_store().list_articles();
      if (json_) {
        Json doc = Json::array();
        for (const auto& a : articles) doc.push_back(article_to_json(a));
        emit(doc);
        return;
      }
      for (const auto& a : articles) out_ << a.article_id << "  " << a.title << "\n";
    });

    auto* del = article->add_subcommand("delete", "Delete an article without assessments");
    del->add_option("id", id_, "Article id")->required();
    on(del, [this] {
      open_store().delete_article(id_);
      out_ << "deleted article " << id_ << "\n";
    });
  }

  // ---- assess ----
  void add_assess(CLI::App& app) {
    auto* assess = app.add_subcommand("assess", "Article assessments (criterion scores)");
    assess->require_subcommand(1);

    auto* create = assess->add_subcommand("create", "Start a draft assessment");
    create->add_option("--article", article_, "Article id")->required();
    create->add_option("--profile", profile_, "Profile id")->required();
    create->add_option("--revision", revision_, "Profile revision (default latest)");
    create->add_option("--id", id_, "Assessment id (default <article>--<profile>-r<rev>)");
    on(create, [this] {
      auto store = open_store();
      const auto p = store.get_profile(profile_, revision());
      auto a = evaluation::make_assessment(id_, article_, p);
      a.status = evaluation::compute_status(store.catalog_for(p), p, a);
      store.put_assessment(a);
      out_ << "created assessment " << a.assessment_id << "\n";
    });

    auto* score = assess->add_subcommand("score", "Score a criterion 1..5, NA, or clear");
    score->add_option("assessment", id_, "Assessment id")->required();
    score->add_option("criterion", target_, "Criterion id")->required();
    score->add_option("value", value_, "1..5, NA, or clear")->required();
    on(score, [this] {
      auto store = open_store();
      const auto current = store.get_assessment(id_);
      const auto p = store.get_profile(current.profile_ref.profile_id,
                                       current.profile_ref.revision);
      std::optional<CriterionScore> s;
      if (value_ != "clear") s = CriterionScore::parse(value_);
      const auto next = evaluation::set_score(current, store.catalog_for(p), p, target_, s);
      store.put_assessment(next);
      out_ << "assessment " << next.assessment_id << " r" << next.revision << ": " << target_
           << " = " << (s ? s->to_string() : "unscored") << " ("
           << to_string(next.status) << ")\n";
    });

    auto* show = assess->add_subcommand("show", "Print an assessment");
    show->add_option("assessment", id_, "Assessment id")->required();
    on(show, [this] {
      const auto store = open_store();
      const auto a = store.get_assessment(id_);
      if (json_) {
        emit(assessment_to_json(a));
        return;
      }
      const auto p = store.get_profile(a.profile_ref.profile_id, a.profile_ref.revision);
      const auto catalog = store.catalog_for(p);
      out_ << a.assessment_id << ": article " << a.article_ref << ", profile "
           << p.profile_id << " r" << p.revision << ", " << to_string(a.status) << "\n";
      for (const auto& id : evaluation::effective_criteria(catalog, p)) {
        auto it = a.scores.find(id);
        out_ << "  " << id << "  " << (it == a.scores.end() ? "-" : it->second.to_string())
             << "\n";
      }
      for (const auto& gap : evaluation::completeness_gaps(catalog, p, a))
        out_ << "  missing: [" << gap.id << "] " << gap.message << "\n";
    });

    auto* list = assess->add_subcommand("list", "List assessments");
    list->add_option("--profile", profile_, "Only this profile (latest revision unless --revision)");
    list->add_option("--revision", revision_, "Profile revision");
    on(list, [this] {
      const auto store = open_store();
      std::vector<Assessment> list;
      if (profile_.empty()) {
        list = store.list_assessments();
      } else {
        list = store.list_assessments(store.get_profile(profile_, revision()).ref());
      }
      if (json_) {
        Json doc = Json::array();
        for (const auto& a : list) doc.push_back(assessment_to_json(a));
        emit(doc);
        return;
      }
      for (const auto& a : list)
        out_ << a.assessment_id << "  " << a.article_ref << "  " << a.profile_ref.profile_id
             << " r" << a.profile_ref.revision << "  " << to_string(a.status) << "\n";
    });

    auto* del = assess->add_subcommand("delete", "Delete an assessment");
    del->add_option("assessment", id_, "Assessment id")->required();
    on(del, [this] {
      open_store().delete_assessment(id_);
      out_ << "deleted assessment " << id_ << "\n";
    });
  }

  // ---- rate / rank / whatif ----
  void add_rate(CLI::App& app) {
    auto* rate = app.add_subcommand("rate", "Rate a complete assessment");
    rate->add_option("assessment", id_, "Assessment id")->required();
    rate->add_flag("--trace", trace_, "Print the step-by-step walkthrough");
    on(rate, [this] {
      const auto store = open_store();
      const auto a = store.get_assessment(id_);
      const auto p = store.get_profile(a.profile_ref.profile_id, a.profile_ref.revision);
      const auto catalog = store.catalog_for(p);
      const auto report = evaluation::rate(catalog, p, a);
      if (json_) {
        emit(rating_to_json(report));
      } else if (trace_) {
        out_ << report::render_walkthrough(catalog, p, a);
      } else {
        out_ << report::render_rating(catalog, report);
      }
    });
  }

  std::vector<Assessment> complete_only(const Store& store, const WeightProfile& p,
                                        bool report_skipped) {
    std::vector<Assessment> out;
    for (auto& a : store.list_assessments(p.ref())) {
      if (a.status == AssessmentStatus::Complete) {
        out.push_back(std::move(a));
      } else if (report_skipped) {
        err_ << "skipping draft assessment " << a.assessment_id << "\n";
      }
    }
    return out;
  }

  void add_rank(CLI::App& app) {
    auto* rank = app.add_subcommand("rank", "Rank articles assessed under a profile");
    rank->add_option("--profile", profile_, "Profile id")->required();
    rank->add_option("--revision", revision_, "Profile revision (default latest)");
    on(rank, [this] {
      const auto store = open_store();
      const auto p = store.get_profile(profile_, revision());
      const auto ranking =
          evaluation::rank_articles(store.catalog_for(p), p, complete_only(store, p, true));
      if (json_) {
        emit({{"profile_id", p.profile_id},
              {"revision", p.revision},
              {"ranking", ranking_to_json(ranking)}});
      } else {
        out_ << report::render_ranking(ranking);
      }
    });
  }

  void add_whatif(CLI::App& app) {
    auto* whatif = app.add_subcommand(
        "whatif", "Re-rank under transient importance changes; nothing is stored");
    whatif->add_option("--profile", profile_, "Profile id")->required();
    whatif->add_option("--revision", revision_, "Profile revision (default latest)");
    whatif->add_option("--set", sets_, "Importance change, target=value (repeatable)");
    whatif->add_flag("--scan", scan_, "Flag every target whose +/-1 change reverses a rank");
    on(whatif, [this] {
      const auto store = open_store();
      const auto p = store.get_profile(profile_, revision());
      const auto catalog = store.catalog_for(p);
      const auto assessments = complete_only(store, p, !json_);
      if (scan_) {
        const auto flags = sensitivity::stability_scan(catalog, p, assessments);
        if (json_) {
          emit(Json{{"reversal_flags", flags}});
          return;
        }
        for (const auto& [target, flag] : flags)
          out_ << target << "  " << (flag ? "reversal" : "stable") << "\n";
        return;
      }
      std::vector<sensitivity::WhatIfDelta> deltas;
      for (const auto& [target, value] : parse_assignments(sets_))
        deltas.push_back({target, ImportanceRating(value)});
      const auto report = sensitivity::what_if(catalog, p, assessments, deltas);
      if (json_) {
        emit(sensitivity_to_json(report));
      } else {
        out_ << report::render_sensitivity(report);
      }
    });
  }

  // ---- export / import ----
  void add_export(CLI::App& app) {
    auto* exp = app.add_subcommand("export", "Write ratings or assessment scores as CSV");
    exp->add_option("--profile", profile_, "Profile id")->required();
    exp->add_option("--revision", revision_, "Profile revision (default latest)");
    exp->add_option("--kind", kind_, "ratings or assessments")
        ->check(CLI::IsMember({"ratings", "assessments"}));
    exp->add_option("--out", file_, "Output file (default stdout)");
    on(exp, [this] {
      const auto store = open_store();
      const auto p = store.get_profile(profile_, revision());
      const auto catalog = store.catalog_for(p);
      std::string document;
      if (kind_ == "ratings") {
        std::map<std::string, ArticleRecord> articles;
        for (auto& a : store.list_articles()) articles.emplace(a.article_id, a);
        document = interchange::export_ratings(catalog, p, complete_only(store, p, true),
                                               articles);
      } else {
        document = interchange::export_assessments(catalog, p, store.list_assessments(p.ref()));
      }
      if (file_.empty()) {
        out_ << document;
        return;
      }
      std::ofstream f(file_, std::ios::binary);
      f << document;
      if (!f) throw Error(ErrorCode::IoError, "cannot write " + file_, file_);
      out_ << "wrote " << file_ << "\n";
    });
  }

  void add_import(CLI::App& app) {
    auto* imp = app.add_subcommand("import", "Load assessment scores from CSV");
    imp->add_option("file", file_, "CSV: article_id then one column per criterion id")
        ->required();
    imp->add_option("--profile", profile_, "Profile id")->required();
    imp->add_option("--revision", revision_, "Profile revision (default latest)");
    on(imp, [this] {
      auto store = open_store();
      const auto p = store.get_profile(profile_, revision());
      const auto stored = store.put_imported(
          interchange::import_assessment_csv(read_text(file_), store.catalog_for(p), p));
      for (const auto& a : stored)
        out_ << "imported " << a.assessment_id << " r" << a.revision << " ("
             << to_string(a.status) << ")\n";
    });
  }

  // ---- demo / serve / meta ----
  void add_demo(CLI::App& app) {
    auto* demo = app.add_subcommand("demo", "Walk through the built-in worked example");
    on(demo, [this] {
      const auto ex = report::worked_example();
      if (json_) {
        emit(rating_to_json(evaluation::rate(ex.catalog, ex.profile, ex.assessment)));
      } else {
        out_ << report::render_walkthrough(ex.catalog, ex.profile, ex.assessment);
      }
    });
  }

  void add_serve(CLI::App& app) {
    auto* serve = app.add_subcommand("serve", "Start the HTTP API");
    serve->add_option("--addr", addr_, "host:port (env RUBRIC_ADDR, default 127.0.0.1:8080)");
    serve->add_option("--cors-origin", cors_, "Allowed browser origin");
    on(serve, [this] {
      const std::string addr = addr_.empty() ? env_or("RUBRIC_ADDR", "127.0.0.1:8080") : addr_;
      const auto colon = addr.rfind(':');
      ServiceConfig config;
      try {
        if (colon == std::string::npos) throw std::invalid_argument(addr);
        config.host = addr.substr(0, colon);
        config.port = std::stoi(addr.substr(colon + 1));
      } catch (const std::logic_error&) {
        throw UsageError("--addr must be host:port, got '" + addr + "'");
      }
      config.store_root = store_dir();
      config.cors_origin = cors_;
      rubric::serve(config);
    });
  }

  void add_meta(CLI::App& app) {
    auto* meta = app.add_subcommand("meta", "Error codes and rating scale labels");
    on(meta, [this] {
      Json codes = Json::array();
      for (auto code : all_error_codes()) codes.push_back(to_string(code));
      if (json_) {
        emit({{"schema_version", kSchemaVersion}, {"error_codes", codes}});
        return;
      }
      out_ << "importance scale:\n";
      for (int i = 0; i <= 5; ++i) out_ << "  " << i << "  " << importance_label(i) << "\n";
      out_ << "score scale:\n";
      for (int i = 1; i <= 5; ++i) out_ << "  " << i << "  " << score_label(i) << "\n";
      out_ << "  NA Not Applicable (renormalizes the category's other criteria)\n";
      out_ << "error codes:\n";
      for (auto code : all_error_codes()) out_ << "  " << to_string(code) << "\n";
    });
  }
};

}  // namespace

std::vector<std::string> subcommands() {
  return {"init",   "catalog", "profile", "article", "assess", "rate", "rank",
          "whatif", "export",  "import",  "demo",    "serve",  "meta"};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rate research articles for a teaching program with weighted criteria",
               "rubric"};
  Commands commands(out, err);
  commands.build(app);

  std::vector<std::string> storage = {"rubric"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    commands.execute();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what();
    if (e.step() != Step::None) err << " (step " << to_string(e.step()) << ")";
    err << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << to_string(ErrorCode::IoError) << ": " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace rubric::cli
