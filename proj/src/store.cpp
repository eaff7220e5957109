#include "rubric/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>

#include "rubric/codec.hpp"
#include "rubric/error.hpp"
#include "rubric/evaluation.hpp"

namespace fs = std::filesystem;

namespace rubric {
namespace {

constexpr const char* kMarker = "store.json";
constexpr const char* kLockFile = ".lock";

class WriteLock {
 public:
  explicit WriteLock(const fs::path& root) {
    const auto path = (root / kLockFile).string();
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
      if (fd_ >= 0) ::close(fd_);
      throw Error(ErrorCode::IoError, "cannot lock store at " + root.string());
    }
  }
  ~WriteLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  WriteLock(const WriteLock&) = delete;
  WriteLock& operator=(const WriteLock&) = delete;

 private:
  int fd_ = -1;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& path, const std::string& content) {
  static std::atomic<unsigned> counter{0};
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.parent_path() /
                       ("." + path.filename().string() + ".tmp." +
                        std::to_string(::getpid()) + "." + std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::IoError, "cannot rename into " + path.string());
  }
}

Json read_json(const fs::path& path) { return parse_json(read_file(path)); }

void write_json(const fs::path& path, const Json& doc) {
  write_atomic(path, doc.dump(2) + "\n");
}

void require_id(std::string_view kind, const std::string& id) {
  if (!is_valid_id(id)) {
    throw Error(ErrorCode::ValidationError,
                "invalid " + std::string(kind) + " id '" + id + "'", id);
  }
}

[[noreturn]] void not_found(std::string_view kind, const std::string& id) {
  throw Error(ErrorCode::NotFound, std::string(kind) + " '" + id + "' not found", id);
}

void raise_violations(std::string_view what, const std::vector<Violation>& violations) {
  if (violations.empty()) return;
  std::string message = std::string(what) + ":";
  for (const auto& v : violations) message += " [" + v.id + "] " + v.message + ";";
  throw Error(ErrorCode::ValidationError, message, violations.front().id);
}

void check_revision(std::string_view kind, const std::string& id,
                    std::optional<std::int64_t> stored, std::int64_t incoming) {
  const std::int64_t expected = stored ? *stored + 1 : 1;
  if (incoming != expected) {
    throw Error(ErrorCode::Conflict,
                std::string(kind) + " '" + id + "' revision " +
                    std::to_string(incoming) + " is stale; expected " +
                    std::to_string(expected),
                id);
  }
}

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (entry.is_regular_file() && entry.path().extension() == ".json" &&
        name.front() != '.')
      out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_valid_id(std::string_view id) {
  if (id.empty() || id.size() > 128) return false;
  auto alnum = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
  };
  if (!alnum(id.front())) return false;
  return std::all_of(id.begin(), id.end(), [&](char c) {
    return alnum(c) || c == '.' || c == '_' || c == '-';
  });
}

Store Store::init(const fs::path& root) {
  fs::create_directories(root);
  const auto marker = root / kMarker;
  if (fs::exists(marker)) {
    Store store = open(root);
    try {
      store.get_catalog(builtin_catalog().ref());
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotFound) throw;
      store.put_catalog(builtin_catalog());
    }
    return store;
  }
  for (const char* dir : {"catalogs", "profiles", "articles", "assessments"})
    fs::create_directories(root / dir);
  Store store(root);
  store.put_catalog(builtin_catalog());
  write_json(marker, Json{{"schema_version", kSchemaVersion}});
  return store;
}

Store Store::open(const fs::path& root) {
  const auto marker = root / kMarker;
  if (!fs::exists(marker)) {
    throw Error(ErrorCode::NotFound,
                "no store at " + root.string() + " (run init first)", root.string());
  }
  const Json doc = read_json(marker);
  const auto version = doc.value("schema_version", std::string{});
  if (version != kSchemaVersion) {
    throw Error(ErrorCode::UnsupportedSchema,
                "store schema_version '" + version + "' is not supported", version);
  }
  return Store(root);
}

// ---- catalogs ----

void Store::put_catalog(const CriteriaCatalog& catalog) {
  require_id("catalog", catalog.catalog_id);
  require_id("catalog version", catalog.version);
  raise_violations("invalid catalog", validate_catalog(catalog));
  WriteLock lock(root_);
  const auto path = root_ / "catalogs" / catalog.catalog_id / (catalog.version + ".json");
  if (fs::exists(path)) {
    throw Error(ErrorCode::Conflict,
                "catalog " + catalog.catalog_id + "@" + catalog.version +
                    " already exists; publish a new version instead",
                catalog.catalog_id);
  }
  write_json(path, catalog_to_json(catalog));
}

CriteriaCatalog Store::get_catalog(const CatalogRef& ref) const {
  require_id("catalog", ref.catalog_id);
  require_id("catalog version", ref.version);
  const auto path = root_ / "catalogs" / ref.catalog_id / (ref.version + ".json");
  if (!fs::exists(path)) not_found("catalog", ref.catalog_id + "@" + ref.version);
  return catalog_from_json(read_json(path));
}

CriteriaCatalog Store::get_catalog(const std::string& catalog_id) const {
  require_id("catalog", catalog_id);
  std::optional<CatalogRef> latest;
  for (const auto& ref : list_catalogs()) {
    if (ref.catalog_id == catalog_id && (!latest || latest->version < ref.version))
      latest = ref;
  }
  if (!latest) not_found("catalog", catalog_id);
  return get_catalog(*latest);
}

std::vector<CatalogRef> Store::list_catalogs() const {
  std::vector<CatalogRef> out;
  std::error_code ec;
  const auto dir = root_ / "catalogs";
  if (!fs::is_directory(dir, ec)) return out;
  std::vector<fs::path> ids;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_directory()) ids.push_back(entry.path());
  std::sort(ids.begin(), ids.end());
  for (const auto& id_dir : ids) {
    for (const auto& file : json_files(id_dir))
      out.push_back({id_dir.filename().string(), file.stem().string()});
  }
  return out;
}

void Store::delete_catalog(const CatalogRef& ref) {
  WriteLock lock(root_);
  get_catalog(ref);
  for (const auto& profile : list_profiles()) {
    if (profile.catalog_ref == ref) {
      throw Error(ErrorCode::ValidationError,
                  "catalog " + ref.catalog_id + "@" + ref.version +
                      " is referenced by profile " + profile.profile_id,
                  ref.catalog_id);
    }
  }
  fs::remove(root_ / "catalogs" / ref.catalog_id / (ref.version + ".json"));
}

CriteriaCatalog Store::catalog_for(const WeightProfile& profile) const {
  return get_catalog(profile.catalog_ref);
}

// ---- profiles ----

std::vector<std::int64_t> Store::profile_revisions(const std::string& profile_id) const {
  require_id("profile", profile_id);
  std::vector<std::int64_t> out;
  for (const auto& file : json_files(root_ / "profiles" / profile_id)) {
    try {
      out.push_back(std::stoll(file.stem().string()));
    } catch (const std::exception&) {
      // not a revision file
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Store::put_profile(const WeightProfile& profile) {
  require_id("profile", profile.profile_id);
  CriteriaCatalog catalog;
  try {
    catalog = catalog_for(profile);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    throw Error(ErrorCode::ValidationError,
                "profile references missing catalog " +
                    profile.catalog_ref.catalog_id + "@" + profile.catalog_ref.version,
                profile.catalog_ref.catalog_id);
  }
  raise_violations("invalid profile",
                   evaluation::validate_profile_structure(catalog, profile));

  WriteLock lock(root_);
  const auto revisions = profile_revisions(profile.profile_id);
  check_revision("profile", profile.profile_id,
                 revisions.empty() ? std::nullopt
                                   : std::optional<std::int64_t>(revisions.back()),
                 profile.revision);
  write_json(root_ / "profiles" / profile.profile_id /
                 (std::to_string(profile.revision) + ".json"),
             profile_to_json(profile));
}

WeightProfile Store::get_profile(const std::string& profile_id,
                                 std::optional<std::int64_t> revision) const {
  const auto revisions = profile_revisions(profile_id);
  if (revisions.empty()) not_found("profile", profile_id);
  const std::int64_t wanted = revision.value_or(revisions.back());
  const auto path =
      root_ / "profiles" / profile_id / (std::to_string(wanted) + ".json");
  if (!fs::exists(path))
    not_found("profile revision", profile_id + " r" + std::to_string(wanted));
  return profile_from_json(read_json(path));
}

std::vector<WeightProfile> Store::list_profiles() const {
  std::vector<WeightProfile> out;
  std::error_code ec;
  const auto dir = root_ / "profiles";
  if (!fs::is_directory(dir, ec)) return out;
  std::vector<std::string> ids;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_directory()) ids.push_back(entry.path().filename().string());
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    if (!profile_revisions(id).empty()) out.push_back(get_profile(id));
  }
  return out;
}

void Store::delete_profile(const std::string& profile_id) {
  WriteLock lock(root_);
  get_profile(profile_id);
  for (const auto& assessment : list_assessments()) {
    if (assessment.profile_ref.profile_id == profile_id) {
      throw Error(ErrorCode::ValidationError,
                  "profile " + profile_id + " is referenced by assessment " +
                      assessment.assessment_id,
                  profile_id);
    }
  }
  fs::remove_all(root_ / "profiles" / profile_id);
}

// ---- articles ----

void Store::put_article(const ArticleRecord& article) {
  require_id("article", article.article_id);
  if (article.title.empty()) {
    throw Error(ErrorCode::ValidationError, "article title is empty",
                article.article_id);
  }
  WriteLock lock(root_);
  const auto path = root_ / "articles" / (article.article_id + ".json");
  std::optional<std::int64_t> stored;
  if (fs::exists(path)) stored = article_from_json(read_json(path)).revision;
  check_revision("article", article.article_id, stored, article.revision);
  write_json(path, article_to_json(article));
}

ArticleRecord Store::get_article(const std::string& article_id) const {
  require_id("article", article_id);
  const auto path = root_ / "articles" / (article_id + ".json");
  if (!fs::exists(path)) not_found("article", article_id);
  return article_from_json(read_json(path));
}

std::vector<ArticleRecord> Store::list_articles() const {
  std::vector<ArticleRecord> out;
  for (const auto& file : json_files(root_ / "articles"))
    out.push_back(article_from_json(read_json(file)));
  return out;
}

void Store::delete_article(const std::string& article_id) {
  WriteLock lock(root_);
  get_article(article_id);
  for (const auto& assessment : list_assessments()) {
    if (assessment.article_ref == article_id) {
      throw Error(ErrorCode::ValidationError,
                  "article " + article_id + " has assessment " +
                      assessment.assessment_id,
                  article_id);
    }
  }
  fs::remove(root_ / "articles" / (article_id + ".json"));
}

// ---- assessments ----

void Store::put_assessment(const Assessment& assessment) {
  require_id("assessment", assessment.assessment_id);
  require_id("article", assessment.article_ref);
  try {
    get_article(assessment.article_ref);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    throw Error(ErrorCode::ValidationError,
                "assessment references missing article " + assessment.article_ref,
                assessment.article_ref);
  }
  WeightProfile profile;
  try {
    profile = get_profile(assessment.profile_ref.profile_id,
                          assessment.profile_ref.revision);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotFound) throw;
    throw Error(ErrorCode::ValidationError,
                "assessment references missing profile revision " +
                    assessment.profile_ref.profile_id + " r" +
                    std::to_string(assessment.profile_ref.revision),
                assessment.profile_ref.profile_id);
  }
  raise_violations("invalid assessment",
                   evaluation::validate_assessment(catalog_for(profile), profile,
                                                   assessment));

  WriteLock lock(root_);
  const auto path = root_ / "assessments" / (assessment.assessment_id + ".json");
  std::optional<std::int64_t> stored;
  if (fs::exists(path)) {
    const Assessment existing = assessment_from_json(read_json(path));
    if (existing.profile_ref != assessment.profile_ref) {
      throw Error(ErrorCode::ValidationError,
                  "assessment " + assessment.assessment_id +
                      " cannot be re-pinned to another profile revision",
                  assessment.assessment_id);
    }
    stored = existing.revision;
  } else if (auto other = find_assessment(assessment.article_ref, assessment.profile_ref)) {
    throw Error(ErrorCode::Conflict,
                "article " + assessment.article_ref + " is already assessed under " +
                    assessment.profile_ref.profile_id + " r" +
                    std::to_string(assessment.profile_ref.revision) + " as " +
                    other->assessment_id,
                other->assessment_id);
  }
  check_revision("assessment", assessment.assessment_id, stored, assessment.revision);
  write_json(path, assessment_to_json(assessment));
}

std::optional<Assessment> Store::find_assessment(const std::string& article_id,
                                                 const ProfileRef& profile) const {
  for (auto& a : list_assessments(profile))
    if (a.article_ref == article_id) return std::move(a);
  return std::nullopt;
}

std::vector<Assessment> Store::put_imported(std::vector<Assessment> assessments) {
  for (auto& a : assessments) {
    if (auto existing = find_assessment(a.article_ref, a.profile_ref)) {
      a.assessment_id = existing->assessment_id;
      a.revision = existing->revision + 1;
    }
    put_assessment(a);
  }
  return assessments;
}

Assessment Store::get_assessment(const std::string& assessment_id) const {
  require_id("assessment", assessment_id);
  const auto path = root_ / "assessments" / (assessment_id + ".json");
  if (!fs::exists(path)) not_found("assessment", assessment_id);
  return assessment_from_json(read_json(path));
}

std::vector<Assessment> Store::list_assessments() const {
  std::vector<Assessment> out;
  for (const auto& file : json_files(root_ / "assessments"))
    out.push_back(assessment_from_json(read_json(file)));
  return out;
}

std::vector<Assessment> Store::list_assessments(const ProfileRef& profile) const {
  auto all = list_assessments();
  std::erase_if(all, [&](const Assessment& a) { return a.profile_ref != profile; });
  return all;
}

void Store::delete_assessment(const std::string& assessment_id) {
  WriteLock lock(root_);
  get_assessment(assessment_id);
  fs::remove(root_ / "assessments" / (assessment_id + ".json"));
}

std::uint64_t Store::content_digest() const {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root_)) {
    if (entry.is_regular_file() && entry.path().filename() != kLockFile)
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::uint64_t hash = 14695981039346656037ull;
  auto mix = [&](std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash ^= c;
      hash *= 1099511628211ull;
    }
  };
  for (const auto& file : files) {
    mix(fs::relative(file, root_).generic_string());
    mix(std::string_view("\0", 1));
    mix(read_file(file));
  }
  return hash;
}

}  // namespace rubric
