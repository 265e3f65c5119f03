#pragma once

#include <chrono>
#include <deque>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uigram/grammar.hpp"
#include "uigram/layout.hpp"
#include "uigram/prompt.hpp"

namespace uigram {

struct GenerationConfig {
  std::string model_name = "gpt-4-0314";
  int max_tokens = 2000;
  double temperature = 0.7;
  double request_timeout_s = 120.0;
  int max_retries = 3;
  int rate_limit_per_minute = 0;  // 0 disables rate limiting
  std::string endpoint = "https://api.openai.com/v1/chat/completions";
  std::string api_key_env = "OPENAI_API_KEY";
  std::string system_message;     // empty: everything goes in one user message
  int workers = 1;                // bounded in-flight requests in run_batch
};

enum class GenStatus { ok, parse_failed, validation_failed, transport_failed };

std::string_view to_string(GenStatus status);
GenStatus gen_status_from_string(std::string_view name);

struct GenerationResult {
  std::string screen_id;
  std::string prompt_hash;
  std::string raw_text;
  std::optional<UILayout> parsed_layout;
  std::optional<std::vector<ProductionRule>> rules_used;
  GenStatus status = GenStatus::transport_failed;
  std::vector<std::string> diagnostics;
};

struct TransportReply {
  bool ok = false;
  std::string content;    // assistant text when ok
  std::string error;      // diagnostic when not
  bool transient = false; // retryable (timeouts, 429/5xx, missing fixture is not)
};

/// A chat-completion backend. Implementations must be safe to call from
/// multiple threads.
class Transport {
 public:
  virtual ~Transport() = default;
  virtual TransportReply send(const GenerationConfig& config,
                              const std::string& prompt) = 0;
  virtual std::string name() const = 0;
};

/// Directory-backed replay transport keyed by hash(prompt text): the file
/// <prompt_hash>.json must hold {"content": "<assistant text>"}. A missing
/// fixture is a permanent failure (there is nothing to retry).
class MockTransport : public Transport {
 public:
  explicit MockTransport(std::filesystem::path fixtures_dir);
  TransportReply send(const GenerationConfig& config,
                      const std::string& prompt) override;
  std::string name() const override { return "mock"; }

 private:
  std::filesystem::path fixtures_dir_;
};

/// Writes the fixture file MockTransport expects for the given prompt text;
/// returns the fixture path.
std::filesystem::path write_mock_fixture(const std::filesystem::path& dir,
                                         const std::string& prompt_text,
                                         const std::string& content);

/// Live JSON-over-HTTP chat-completion client (request shape
/// {model, messages, max_tokens, temperature}). The API key is read from
/// the environment variable named in the config.
class HttpTransport : public Transport {
 public:
  TransportReply send(const GenerationConfig& config,
                      const std::string& prompt) override;
  std::string name() const override { return "live"; }
};

/// Sliding-window limiter: at most limit_per_minute calls started in any
/// 60-second window. Clock and sleep are injectable for tests.
class RateLimiter {
 public:
  using Clock = std::function<std::chrono::steady_clock::time_point()>;
  using Sleep = std::function<void(std::chrono::milliseconds)>;

  explicit RateLimiter(int limit_per_minute, Clock clock = nullptr,
                       Sleep sleep = nullptr);

  /// Blocks until starting another request keeps the window within limits.
  void acquire();

 private:
  int limit_;
  Clock clock_;
  Sleep sleep_;
  std::mutex mutex_;
  std::deque<std::chrono::steady_clock::time_point> starts_;
};

struct ParseOutcome {
  std::optional<UILayout> layout;
  std::optional<std::vector<ProductionRule>> rules_used;
  GenStatus status = GenStatus::parse_failed;
  std::vector<std::string> diagnostics;
};

/// Turns raw model output into a validated layout: strips code fences and
/// surrounding prose, locates the first balanced JSON object, reads the
/// "layout" tree and the optional "rules_used" list ("LHS -> ..." strings),
/// then runs validate(). Every failure mode carries a distinct diagnostic.
ParseOutcome parse_response(std::string_view raw_text, const Vocabulary& vocab,
                            Canvas canvas);

/// Called with the raw assistant text as soon as it arrives, before any
/// parsing, so the audit trail survives parser crashes.
using RawSink = std::function<void(const PromptBundle&, const std::string& raw)>;

/// One prompt -> one result. Transient transport failures are retried with
/// exponential backoff up to config.max_retries; exhausted retries yield
/// status transport_failed, never an exception.
GenerationResult generate(const PromptBundle& bundle,
                          const GenerationConfig& config, Transport& transport,
                          const Vocabulary& vocab, Canvas canvas,
                          RateLimiter* limiter = nullptr,
                          const RawSink& raw_sink = nullptr,
                          const RateLimiter::Sleep& sleep = nullptr);

struct BatchSummary {
  int completed = 0;
  int skipped = 0;  // results already on disk (resume)
  std::vector<GenerationResult> results;  // sorted by screen_id
};

/// Runs every bundle against the transport with config.workers threads.
/// Results are persisted to out_dir/results/<screen_id>.json before the
/// function returns, raw exchanges are appended to out_dir/transcript.jsonl
/// as they arrive, and bundles whose result file already exists are loaded
/// instead of re-generated, which makes interrupted runs resumable.
BatchSummary run_batch(std::span<const PromptBundle> bundles,
                       const GenerationConfig& config, Transport& transport,
                       const Vocabulary& vocab, Canvas canvas,
                       const std::filesystem::path& out_dir);

void save_result_file(const GenerationResult& result,
                      const std::filesystem::path& path);
GenerationResult load_result_file(const std::filesystem::path& path,
                                  Canvas canvas);
/// Loads every results/<screen_id>.json under dir, sorted by screen_id.
std::vector<GenerationResult> load_results_dir(const std::filesystem::path& dir,
                                               Canvas canvas);

}  // namespace uigram
