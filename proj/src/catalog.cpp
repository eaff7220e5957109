#include "rubric/catalog.hpp"

#include <nlohmann/json.hpp>
#include <set>

#include "rubric/codec.hpp"
#include "rubric/error.hpp"

namespace rubric {
namespace {

struct CategorySeed {
  const char* name;
  std::vector<const char*> prompts;
};

CriteriaCatalog make_builtin() {
  const std::vector<CategorySeed> seeds = {
      {"Clarity",
       {"How simple is the article narrative (i.e. avoiding unnecessary words, "
        "jargon, technical language, and the extended used of citations)?",
        "To what extent does the article use a top down structure where the "
        "initial paragraph provides the setting and main issues of the research "
        "article?"}},
      {"Succinctness",
       {"To what extent does the article length match the effort required by "
        "students, as stipulated by the course, to allow them to conduct an "
        "optimal analysis of it?",
        "To what extent does the article provide sufficient information to allow "
        "students to develop coherent conclusions?",
        "To what extent does the article focus on the findings, rather than the "
        "inputs such as the literature review or the research methodology?"}},
      {"Objectiveness",
       {"To what extent is the article written in a neutral, unbiased manner, "
        "allowing students to develop their own opinion?"}},
      {"Realism",
       {"To what extent does the article incorporate real world examples?",
        "How authentic does the article seem given the level of evidence and "
        "facts presented?",
        "To what extent does the article cite participants to increase its "
        "realism?"}},
      {"Timeliness",
       {"To what extent are the research article's findings up-to-date?"}},
      {"Teaching friendliness",
       {"To what extent has the article been previously assessed for use in "
        "other teaching programs?"}},
      {"Depth",
       {"To what extent does the article provide multiple perspectives from "
        "different stakeholders?",
        "To what extent does the article provide distractors (non-pertinent "
        "features) to challenge students' analytical skills?",
        "To what extent does the complexity of data (qualitative and "
        "qualitative) presented by the article help to develop students' "
        "problem solving skills?",
        "To what extent does the article contain teaching aids to support "
        "student learning?",
        "To what extent does the article let students make their own decisions "
        "by not providing a diagnosis of the problem?",
        "To what extent does the article provide feedback on the possible "
        "actions of students?",
        "To what extent does the article synthesize an existing body of "
        "research for the area of study?"}},
      {"Engagement",
       {"To what extent does the article's storyline have a 'hook' to engage "
        "students?",
        "To what extent does the article have an engaging storyline?",
        "To what extent does the article include human factors such as "
        "cultural, socio-political factors, and ethical issues?",
        "To what extent does the article include controversy, contrast, "
        "conflict, dilemma, or other dramatic elements?",
        "To what extent does the article gradually disclose the content?",
        "To what extent does the article allow students to 'learn by doing'?"}},
      {"Relevance to practice",
       {"To what extent does the article describe current practitioner issues?",
        "To what extent does the article contribute with an implementable "
        "approach to resolve a practical issue?",
        "To what extent does the article stimulate a reader's casual "
        "assumptions by identifying emerging trends, structural changes or "
        "paradigms?",
        "To what extent does the article reflect collaboration between "
        "researchers and practitioners?"}},
      {"Teaching objectives focus",
       {"To what extent is the article applicable to the subject area?",
        "To what extent does the article fit into the teaching objectives of "
        "the subject?",
        "To what extent does the difficulty of the article match the ability of "
        "students in the subject?"}},
      {"Thinking skills development",
       {"To what extent does the article enable students to develop problem "
        "solving skills?",
        "To what extent does the article enable students to develop critical "
        "thinking skills?"}},
  };

  CriteriaCatalog catalog;
  catalog.catalog_id = std::string(kBuiltinCatalogId);
  catalog.version = "1.0";
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Category category;
    category.id = std::to_string(i + 1);
    category.name = seeds[i].name;
    for (std::size_t j = 0; j < seeds[i].prompts.size(); ++j) {
      category.criteria.push_back(Criterion{
          category.id + "." + std::to_string(j + 1), seeds[i].prompts[j],
          category.id});
    }
    catalog.categories.push_back(std::move(category));
  }
  return catalog;
}

}  // namespace

const Category* CriteriaCatalog::find_category(std::string_view id) const {
  for (const auto& category : categories) {
    if (category.id == id) return &category;
  }
  return nullptr;
}

const Criterion* CriteriaCatalog::find_criterion(std::string_view id) const {
  for (const auto& category : categories) {
    for (const auto& criterion : category.criteria) {
      if (criterion.id == id) return &criterion;
    }
  }
  return nullptr;
}

std::size_t CriteriaCatalog::criterion_count() const {
  std::size_t count = 0;
  for (const auto& category : categories) count += category.criteria.size();
  return count;
}

const CriteriaCatalog& builtin_catalog() {
  static const CriteriaCatalog catalog = make_builtin();
  return catalog;
}

std::vector<Violation> validate_catalog(const CriteriaCatalog& catalog) {
  std::vector<Violation> out;
  if (catalog.catalog_id.empty()) out.push_back({"", "catalog_id is empty"});
  if (catalog.version.empty())
    out.push_back({catalog.catalog_id, "version is empty"});
  if (catalog.categories.empty())
    out.push_back({catalog.catalog_id, "catalog has no categories"});

  std::set<std::string> category_ids;
  std::set<std::string> criterion_ids;
  for (const auto& category : catalog.categories) {
    if (category.id.empty()) out.push_back({"", "category id is empty"});
    if (!category_ids.insert(category.id).second)
      out.push_back({category.id, "duplicate category id"});
    if (category.name.empty())
      out.push_back({category.id, "category name is empty"});
    if (category.criteria.empty())
      out.push_back({category.id, "category has no criteria"});

    const std::string prefix = category.id + ".";
    for (const auto& criterion : category.criteria) {
      if (!criterion_ids.insert(criterion.id).second)
        out.push_back({criterion.id, "duplicate criterion id"});
      if (criterion.prompt.empty())
        out.push_back({criterion.id, "criterion prompt is empty"});
      if (criterion.category_id != category.id)
        out.push_back({criterion.id, "criterion category_id does not match "
                                     "its category " + category.id});
      if (criterion.id.size() <= prefix.size() ||
          criterion.id.compare(0, prefix.size(), prefix) != 0)
        out.push_back({criterion.id, "criterion id must have the form " +
                                         prefix + "<k>"});
    }
  }
  return out;
}

CriteriaCatalog load_catalog(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed catalog: ") + e.what());
  }
  CriteriaCatalog catalog = catalog_from_json(doc);
  auto violations = validate_catalog(catalog);
  if (!violations.empty()) {
    std::string message = "invalid catalog:";
    for (const auto& v : violations) message += " [" + v.id + "] " + v.message + ";";
    throw Error(ErrorCode::ValidationError, message, violations.front().id);
  }
  return catalog;
}

std::string serialize_catalog(const CriteriaCatalog& catalog) {
  return catalog_to_json(catalog).dump(2);
}

}  // namespace rubric
