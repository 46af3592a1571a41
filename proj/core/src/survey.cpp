#include "copnum/survey.hpp"

#include <algorithm>
#include <chrono>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "copnum/canonical.hpp"
#include "copnum/enumerate.hpp"
#include "copnum/graph6.hpp"
#include "copnum/structure.hpp"

namespace copnum {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const char* to_string(SurveyMode m) {
  switch (m) {
    case SurveyMode::Full: return "full";
    case SurveyMode::Pruned: return "pruned";
    case SurveyMode::Audit: return "audit";
  }
  return "unknown";
}

std::optional<SurveyMode> survey_mode_from_string(const std::string& s) {
  for (SurveyMode m : {SurveyMode::Full, SurveyMode::Pruned, SurveyMode::Audit}) {
    if (s == to_string(m)) return m;
  }
  return std::nullopt;
}

int default_jobs() {
  if (const char* env = std::getenv("COPNUM_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j > 0) return j;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

std::uint64_t SurveySummary::solved() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : by_cop_number) t += c;
  return t;
}

std::uint64_t SurveySummary::pruned() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : by_certificate) t += c;
  return t;
}

std::uint64_t SurveySummary::c3plus() const {
  std::uint64_t t = 0;
  for (const auto& [k, c] : by_cop_number) {
    if (k >= 3) t += c;
  }
  return t;
}

bool SurveySummary::same_result(const SurveySummary& o) const {
  return n == o.n && mode == o.mode && threshold == o.threshold && classes == o.classes &&
         by_cop_number == o.by_cop_number && by_certificate == o.by_certificate &&
         at_or_above_threshold == o.at_or_above_threshold &&
         lower_bound_violations == o.lower_bound_violations && audited == o.audited &&
         audit_contradictions == o.audit_contradictions && spec == o.spec;
}

nlohmann::json to_json(const SurveySummary& s) {
  nlohmann::json j;
  j["n"] = s.n;
  j["mode"] = to_string(s.mode);
  j["threshold"] = s.threshold;
  j["classes"] = s.classes;
  nlohmann::json by_k = nlohmann::json::object();
  for (const auto& [k, c] : s.by_cop_number) by_k[std::to_string(k)] = c;
  j["by_cop_number"] = by_k;
  j["by_certificate"] = s.by_certificate;
  j["at_or_above_threshold"] = s.at_or_above_threshold;
  j["lower_bound_violations"] = s.lower_bound_violations;
  j["audited"] = s.audited;
  j["audit_contradictions"] = s.audit_contradictions;
  j["seconds"] = s.seconds;
  j["spec"] = s.spec;
  return j;
}

SurveySummary summary_from_json(const nlohmann::json& j) {
  SurveySummary s;
  s.n = j.at("n").get<int>();
  const auto mode = survey_mode_from_string(j.at("mode").get<std::string>());
  if (!mode) throw Error("summary has an unknown mode");
  s.mode = *mode;
  s.threshold = j.at("threshold").get<int>();
  s.classes = j.at("classes").get<std::uint64_t>();
  for (const auto& [k, c] : j.at("by_cop_number").items()) {
    s.by_cop_number[std::stoi(k)] = c.get<std::uint64_t>();
  }
  s.by_certificate = j.at("by_certificate").get<std::map<std::string, std::uint64_t>>();
  s.at_or_above_threshold = j.at("at_or_above_threshold").get<std::vector<std::string>>();
  s.lower_bound_violations = j.at("lower_bound_violations").get<std::uint64_t>();
  s.audited = j.at("audited").get<std::uint64_t>();
  s.audit_contradictions = j.at("audit_contradictions").get<std::vector<std::string>>();
  s.seconds = j.at("seconds").get<double>();
  s.spec = j.at("spec").get<std::string>();
  return s;
}

void write_summary_csv(std::ostream& out, const SurveySummary& s) {
  auto count = [&](int k) {
    const auto it = s.by_cop_number.find(k);
    return it == s.by_cop_number.end() ? std::uint64_t{0} : it->second;
  };
  out << "n,mode,classes,c1,c2,c3plus,pruned,seconds\n";
  out << s.n << ',' << to_string(s.mode) << ',' << s.classes << ',' << count(1) << ','
      << count(2) << ',' << s.c3plus() << ',' << s.pruned() << ',' << s.seconds << '\n';
}

SurveyRecord survey_graph(const Graph& g, SurveyMode mode, int k_max, const CopNumberFn& solver,
                          bool* lower_bound_violated) {
  SurveyRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.min_deg = g.min_degree();
  r.max_deg = g.max_degree();
  r.girth = girth(g);
  if (lower_bound_violated != nullptr) *lower_bound_violated = false;
  if (mode != SurveyMode::Full) {
    const PruneVerdict v = prune_c_at_most_2(g);
    if (v.proved()) {
      r.pruned_by = v.rule;
      r.witness = v.witness;
      return r;
    }
  }
  SolveStats stats;
  r.cop_number = solver ? solver(g, k_max, &stats) : cop_number(g, k_max, &stats);
  r.states_explored = stats.states;
  if (lower_bound_violated != nullptr) {
    *lower_bound_violated = lower_bound(g).value > *r.cop_number;
  }
  return r;
}

namespace {

constexpr int kCheckpointVersion = 1;
constexpr std::size_t kStreamBatch = 1000;

std::uint64_t sample_hash(std::uint64_t seed, const std::string& g6) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : g6) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  // splitmix64 finalizer
  std::uint64_t z = h ^ (seed + 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string spec_echo(const SurveyOptions& o) {
  std::ostringstream os;
  os << "n=" << o.n << " mode=" << to_string(o.mode) << " k_max=" << o.k_max
     << " threshold=" << o.threshold << " source="
     << (o.input ? "file:" + o.input->string() : std::string("generator"));
  if (o.mode == SurveyMode::Audit) os << " sample=" << o.sample << " seed=" << o.seed;
  return os.str();
}

struct Batch {
  std::size_t index = 0;
  bool generated = false;            // expand from the generator in the worker
  std::vector<Graph> graphs;         // stream input
  std::vector<std::size_t> lines;    // input line of each graph
  std::size_t end_line = 0;
};

struct BatchResult {
  std::vector<SurveyRecord> records;
  std::vector<bool> lower_bound_violated;
  std::size_t end_line = 0;
};

class BatchSource {
 public:
  virtual ~BatchSource() = default;
  /// Called with the pipeline lock held.
  virtual std::optional<Batch> next() = 0;
};

class GeneratorSource final : public BatchSource {
 public:
  GeneratorSource(const Generator& gen, std::size_t first) : gen_(gen), next_(first) {}
  std::optional<Batch> next() override {
    if (next_ >= gen_.batch_count()) return std::nullopt;
    Batch b;
    b.index = next_++;
    b.generated = true;
    return b;
  }

 private:
  const Generator& gen_;
  std::size_t next_;
};

class StreamSource final : public BatchSource {
 public:
  StreamSource(const fs::path& path, int n, std::size_t first_batch, std::size_t skip_lines)
      : in_(path), n_(n), next_(first_batch) {
    if (!in_) throw Error("cannot open input " + path.string());
    std::string discard;
    for (std::size_t i = 0; i < skip_lines && std::getline(in_, discard); ++i) ++line_offset_;
    reader_.emplace(in_);
  }
  std::optional<Batch> next() override {
    Batch b;
    while (b.graphs.size() < kStreamBatch) {
      auto g = reader_->next();
      if (!g) break;
      const std::size_t line = line_offset_ + reader_->line();
      if (g->order() != n_) {
        throw Error("line " + std::to_string(line) + ": graph has order " +
                    std::to_string(g->order()) + ", expected " + std::to_string(n_));
      }
      b.graphs.push_back(*g);
      b.lines.push_back(line);
    }
    if (b.graphs.empty()) return std::nullopt;
    b.index = next_++;
    b.end_line = line_offset_ + reader_->line();
    return b;
  }

 private:
  std::ifstream in_;
  int n_;
  std::size_t next_;
  std::size_t line_offset_ = 0;
  std::optional<Graph6Reader> reader_;
};

struct Checkpoint {
  std::string spec;
  std::string token;  // generator resume token (generator source only)
  std::size_t next_batch = 0;
  std::size_t lines = 0;
  std::uint64_t out_bytes = 0;
  SurveySummary summary;
  std::set<std::pair<std::uint64_t, std::string>> sample;
  bool complete = false;
};

void save_checkpoint(const fs::path& path, const Checkpoint& c) {
  nlohmann::json j;
  j["version"] = kCheckpointVersion;
  j["spec"] = c.spec;
  j["token"] = c.token;
  j["next_batch"] = c.next_batch;
  j["lines"] = c.lines;
  j["out_bytes"] = c.out_bytes;
  j["summary"] = to_json(c.summary);
  nlohmann::json sample = nlohmann::json::array();
  for (const auto& [h, g6] : c.sample) sample.push_back({h, g6});
  j["sample"] = sample;
  j["complete"] = c.complete;

  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::optional<Checkpoint> load_checkpoint(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec) || fs::file_size(path, ec) == 0) return std::nullopt;
  std::ifstream in(path);
  if (!in) throw Error("cannot read checkpoint " + path.string());
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("version").get<int>() != kCheckpointVersion) {
      throw Error("unsupported checkpoint version");
    }
    Checkpoint c;
    c.spec = j.at("spec").get<std::string>();
    c.token = j.at("token").get<std::string>();
    c.next_batch = j.at("next_batch").get<std::size_t>();
    c.lines = j.at("lines").get<std::size_t>();
    c.out_bytes = j.at("out_bytes").get<std::uint64_t>();
    c.summary = summary_from_json(j.at("summary"));
    for (const auto& e : j.at("sample")) {
      c.sample.emplace(e.at(0).get<std::uint64_t>(), e.at(1).get<std::string>());
    }
    c.complete = j.at("complete").get<bool>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error("corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

BatchResult process_batch(const Batch& batch, const Generator* gen, const SurveyOptions& o,
                          const CopNumberFn& solver) {
  std::vector<Graph> graphs = batch.generated ? gen->expand(batch.index) : batch.graphs;
  BatchResult out;
  out.end_line = batch.end_line;
  out.records.reserve(graphs.size());
  out.lower_bound_violated.reserve(graphs.size());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    Graph g = graphs[i];
    if (!batch.generated) {
      if (!is_connected(g)) {
        throw Error("line " + std::to_string(batch.lines[i]) + ": graph is not connected");
      }
      g = canonical_graph(g);
    }
    const auto start = Clock::now();
    bool violated = false;
    SurveyRecord r = survey_graph(g, o.mode, o.k_max, solver, &violated);
    r.micros = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count());
    out.records.push_back(std::move(r));
    out.lower_bound_violated.push_back(violated);
  }
  return out;
}

}  // namespace

SurveyResult run_survey(const SurveyOptions& o) {
  if (o.n < 1 || o.n > kMaxVertices) {
    throw Error("--n must be in 1.." + std::to_string(kMaxVertices));
  }
  if (o.jobs < 1) throw Error("--jobs must be positive");
  if (o.k_max < 1) throw Error("--max-k must be positive");
  if (o.mode == SurveyMode::Audit && o.sample == 0) throw Error("--sample must be positive");

  const auto run_start = Clock::now();
  const CopNumberFn solver =
      o.solver ? o.solver
               : CopNumberFn([](const Graph& g, int k, SolveStats* s) { return cop_number(g, k, s); });

  SurveyResult result;
  Checkpoint state;
  state.spec = spec_echo(o);
  state.summary.n = o.n;
  state.summary.mode = o.mode;
  state.summary.threshold = o.threshold;
  state.summary.spec = state.spec;

  std::optional<Generator> gen;
  if (!o.input) gen.emplace(GenSpec{o.n});

  if (o.checkpoint) {
    if (auto loaded = load_checkpoint(*o.checkpoint)) {
      if (loaded->spec != state.spec) {
        throw Error("checkpoint " + o.checkpoint->string() + " belongs to a different run (" +
                    loaded->spec + ")");
      }
      state = std::move(*loaded);
      if (gen) state.next_batch = gen->resume_batch(state.token);
      result.resumed = true;
    }
  }
  const double prior_seconds = state.summary.seconds;

  std::ofstream out;
  if (o.out) {
    if (result.resumed) {
      std::error_code ec;
      const auto size = fs::exists(*o.out, ec) ? fs::file_size(*o.out) : 0;
      if (size < state.out_bytes) throw Error("report " + o.out->string() + " is shorter than the checkpoint");
      fs::resize_file(*o.out, state.out_bytes);
      out.open(*o.out, std::ios::app | std::ios::binary);
    } else {
      out.open(*o.out, std::ios::trunc | std::ios::binary);
    }
    if (!out) throw Error("cannot open report " + o.out->string());
  }

  std::unique_ptr<BatchSource> source;
  if (gen) {
    source = std::make_unique<GeneratorSource>(*gen, state.next_batch);
  } else {
    source = std::make_unique<StreamSource>(*o.input, o.n, state.next_batch, state.lines);
  }

  // Ordered pipeline: workers pull batches, the calling thread writes them in order.
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, BatchResult> ready;
  std::size_t next_to_write = state.next_batch;
  std::size_t assigned = state.next_batch;
  const std::size_t window = static_cast<std::size_t>(o.jobs) * 4 + 4;
  bool exhausted = false;
  bool halt = false;
  int running = o.jobs;
  std::exception_ptr failure;

  auto stop_requested = [&] {
    return halt || (o.stop != nullptr && o.stop->load(std::memory_order_relaxed));
  };

  auto worker = [&] {
    while (true) {
      std::optional<Batch> batch;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return stop_requested() || failure || assigned < next_to_write + window; });
        if (stop_requested() || failure || exhausted) break;
        try {
          batch = source->next();
        } catch (...) {
          failure = std::current_exception();
          break;
        }
        if (!batch) {
          exhausted = true;
          break;
        }
        ++assigned;
      }
      try {
        BatchResult r = process_batch(*batch, gen ? &*gen : nullptr, o, solver);
        std::lock_guard lock(mu);
        ready.emplace(batch->index, std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
      }
      cv.notify_all();
    }
    {
      std::lock_guard lock(mu);
      --running;
    }
    cv.notify_all();
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(o.jobs));
  for (int i = 0; i < o.jobs; ++i) threads.emplace_back(worker);

  auto snapshot = [&] {
    if (out.is_open()) {
      out.flush();
      state.out_bytes = static_cast<std::uint64_t>(out.tellp());
    }
    if (gen) state.token = gen->checkpoint_token(state.next_batch);
    state.summary.seconds =
        prior_seconds + std::chrono::duration<double>(Clock::now() - run_start).count();
  };

  std::size_t since_checkpoint = 0;
  std::size_t written_batches = 0;
  auto last_checkpoint = Clock::now();
  try {
    while (true) {
      BatchResult r;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return failure || ready.contains(next_to_write) || running == 0; });
        if (failure) break;
        auto it = ready.find(next_to_write);
        if (it == ready.end()) break;
        r = std::move(it->second);
        ready.erase(it);
      }

      SurveySummary& sum = state.summary;
      for (std::size_t i = 0; i < r.records.size(); ++i) {
        const SurveyRecord& rec = r.records[i];
        if (out.is_open()) out << to_json(rec, o.stable_output).dump() << '\n';
        ++sum.classes;
        if (rec.cop_number) {
          ++sum.by_cop_number[*rec.cop_number];
          if (*rec.cop_number >= o.threshold) sum.at_or_above_threshold.push_back(rec.graph6);
          if (r.lower_bound_violated[i]) ++sum.lower_bound_violations;
        } else {
          ++sum.by_certificate[to_string(*rec.pruned_by)];
          if (o.mode == SurveyMode::Audit) {
            state.sample.emplace(sample_hash(o.seed, rec.graph6), rec.graph6);
            if (state.sample.size() > o.sample) state.sample.erase(std::prev(state.sample.end()));
          }
        }
      }
      if (out.is_open() && !out) throw Error("write to " + o.out->string() + " failed");
      since_checkpoint += r.records.size();
      state.lines = std::max(state.lines, r.end_line);
      ++written_batches;
      {
        std::lock_guard lock(mu);
        ++next_to_write;
        state.next_batch = next_to_write;
        if (o.stop_after_batches && written_batches >= *o.stop_after_batches) halt = true;
      }
      cv.notify_all();

      if (o.checkpoint && (since_checkpoint >= o.checkpoint_every ||
                           Clock::now() - last_checkpoint >=
                               std::chrono::duration<double>(o.checkpoint_seconds))) {
        snapshot();
        save_checkpoint(*o.checkpoint, state);
        since_checkpoint = 0;
        last_checkpoint = Clock::now();
      }
    }
  } catch (...) {
    std::lock_guard lock(mu);
    if (!failure) failure = std::current_exception();
  }
  cv.notify_all();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  result.complete = exhausted && ready.empty();
  if (result.complete && !state.complete && o.mode == SurveyMode::Audit) {
    for (const auto& [h, g6] : state.sample) {
      const Graph g = parse_graph6(g6);
      bool contradiction = false;
      try {
        contradiction = solver(g, o.k_max, nullptr) > 2;
      } catch (const ExceedsKMax&) {
        contradiction = true;
      }
      if (contradiction) state.summary.audit_contradictions.push_back(g6);
    }
    state.summary.audited = state.sample.size();
  }
  state.complete = state.complete || result.complete;

  snapshot();
  if (o.checkpoint) save_checkpoint(*o.checkpoint, state);
  if (result.complete && o.summary) {
    std::ofstream csv(*o.summary, std::ios::trunc);
    if (!csv) throw Error("cannot write summary " + o.summary->string());
    write_summary_csv(csv, state.summary);
  }
  result.summary = state.summary;
  return result;
}

VerifyResult verify_m3(const VerifyOptions& options) {
  if (options.mode == SurveyMode::Audit) throw Error("verify-m3 runs in full or pruned mode");
  VerifyResult v;
  const CopNumberFn solver =
      options.solver
          ? options.solver
          : CopNumberFn([](const Graph& g, int k, SolveStats* s) { return cop_number(g, k, s); });
  auto fail = [&](std::string message, std::string offending) {
    v.ok = false;
    v.message = std::move(message);
    v.offending = std::move(offending);
    return v;
  };

  for (int n = 1; n <= options.max_n; ++n) {
    SurveyOptions so;
    so.n = n;
    so.mode = options.mode;
    so.jobs = options.jobs;
    so.solver = solver;
    so.stop = options.stop;
    SurveyResult r = run_survey(so);
    const SurveySummary& s = r.summary;
    v.surveys.push_back(s);
    if (options.log != nullptr) {
      *options.log << "n=" << n << " classes=" << s.classes << " solved=" << s.solved()
                   << " pruned=" << s.pruned() << " c>=3=" << s.c3plus() << " seconds=" << s.seconds
                   << '\n';
    }
    if (!r.complete) return fail("interrupted at n=" + std::to_string(n), "");
    if (s.lower_bound_violations != 0) {
      return fail("cop number below the structural lower bound at n=" + std::to_string(n), "");
    }
    if (n < 10 && !s.at_or_above_threshold.empty()) {
      return fail("graph on " + std::to_string(n) + " vertices needs 3 or more cops",
                  s.at_or_above_threshold.front());
    }
    if (n == 10) {
      if (s.at_or_above_threshold.size() != 1) {
        return fail(std::to_string(s.at_or_above_threshold.size()) +
                        " classes on 10 vertices need 3 or more cops",
                    s.at_or_above_threshold.empty() ? "" : s.at_or_above_threshold.back());
      }
      const std::string g6 = s.at_or_above_threshold.front();
      const Graph g = parse_graph6(g6);
      int c = 0;
      try {
        c = solver(g, 4, nullptr);
      } catch (const ExceedsKMax&) {
        c = 5;
      }
      if (c != 3) return fail("the 10-vertex class needs " + std::to_string(c) + " cops", g6);
      if (!is_petersen_by_property(g)) {
        return fail("the 10-vertex class lacks the Petersen neighborhood property", g6);
      }
      if (canonical_form(g) != canonical_form(petersen())) {
        return fail("the 10-vertex class is not the Petersen graph", g6);
      }
      v.three_cop_graph = g6;
    }
  }
  v.ok = true;
  v.message = "no class below 10 vertices needs 3 cops";
  if (!v.three_cop_graph.empty()) {
    v.message += "; the Petersen graph is the unique 10-vertex class needing 3 cops";
  }
  return v;
}

}  // namespace copnum
