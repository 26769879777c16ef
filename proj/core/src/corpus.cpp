#include "honkit/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "honkit/errors.hpp"
#include "random.hpp"

namespace honkit {

bool Vocabulary::valid_token(std::string_view token) noexcept {
  if (token.empty()) return false;
  return std::none_of(token.begin(), token.end(), [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

NodeIndex Vocabulary::intern(std::string_view token) {
  if (!valid_token(token)) {
    throw ArgumentError("invalid node token '" + std::string(token) + "'");
  }
  auto [it, inserted] =
      index_.try_emplace(std::string(token), static_cast<NodeIndex>(tokens_.size()));
  if (inserted) tokens_.emplace_back(token);
  return it->second;
}

std::optional<NodeIndex> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

PathCorpus::PathCorpus(std::shared_ptr<const Vocabulary> vocabulary, std::vector<Path> paths)
    : vocabulary_(std::move(vocabulary)), paths_(std::move(paths)) {
  if (!vocabulary_) throw ArgumentError("corpus requires a vocabulary");
  std::vector<char> seen(vocabulary_->size(), 0);
  for (const auto& path : paths_) {
    if (path.nodes.empty()) throw ArgumentError("path with no nodes");
    if (path.multiplicity == 0) throw ArgumentError("path multiplicity must be >= 1");
    for (NodeIndex n : path.nodes) {
      if (n >= seen.size()) throw ArgumentError("node index outside vocabulary");
      seen[n] = 1;
    }
    instance_count_ += path.multiplicity;
    transition_count_ += path.multiplicity * path.transitions();
  }
  for (NodeIndex i = 0; i < seen.size(); ++i) {
    if (seen[i]) universe_.push_back(i);
  }
}

PathCorpus PathCorpus::from_tokens(
    const std::vector<std::pair<std::vector<std::string>, std::uint64_t>>& paths) {
  auto vocab = std::make_shared<Vocabulary>();
  std::vector<Path> out;
  out.reserve(paths.size());
  for (const auto& [tokens, multiplicity] : paths) {
    Path p;
    p.multiplicity = multiplicity;
    p.nodes.reserve(tokens.size());
    for (const auto& t : tokens) p.nodes.push_back(vocab->intern(t));
    out.push_back(std::move(p));
  }
  return PathCorpus(std::move(vocab), std::move(out));
}

std::vector<std::string> PathCorpus::universe_tokens() const {
  std::vector<std::string> out;
  out.reserve(universe_.size());
  for (NodeIndex n : universe_) out.push_back(vocabulary_->token(n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> PathCorpus::tokens(const Path& path) const {
  std::vector<std::string> out;
  out.reserve(path.nodes.size());
  for (NodeIndex n : path.nodes) out.push_back(vocabulary_->token(n));
  return out;
}

std::map<std::vector<std::string>, std::uint64_t> PathCorpus::canonical() const {
  std::map<std::vector<std::string>, std::uint64_t> out;
  for (const auto& p : paths_) out[tokens(p)] += p.multiplicity;
  return out;
}

PathFormat parse_path_format(std::string_view name) {
  if (name == "lines") return PathFormat::lines;
  if (name == "ngram") return PathFormat::ngram;
  throw ArgumentError("unknown path format '" + std::string(name) + "' (expected lines|ngram)");
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      break;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

PathCorpus parse_paths(std::istream& input, PathFormat format) {
  auto vocab = std::make_shared<Vocabulary>();
  std::vector<Path> paths;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;

    auto fields = split_fields(view);
    Path path;
    if (format == PathFormat::ngram) {
      if (fields.size() < 2) throw ParseError(line_no, "ngram line needs nodes and a multiplicity");
      std::string_view count = fields.back();
      fields.pop_back();
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), value);
      if (ec != std::errc() || ptr != count.data() + count.size() || value < 1) {
        throw ParseError(line_no, "malformed multiplicity '" + std::string(count) + "'");
      }
      path.multiplicity = value;
    }
    path.nodes.reserve(fields.size());
    for (auto field : fields) {
      if (!Vocabulary::valid_token(field)) {
        throw ParseError(line_no, field.empty() ? "empty node token"
                                                : "invalid node token '" + std::string(field) + "'");
      }
      path.nodes.push_back(vocab->intern(field));
    }
    paths.push_back(std::move(path));
  }
  if (input.bad()) throw ParseError(line_no, "read failure");
  if (paths.empty()) throw EmptyInputError("no paths in input");
  return PathCorpus(std::move(vocab), std::move(paths));
}

PathCorpus parse_paths(std::string_view text, PathFormat format) {
  std::istringstream in{std::string(text)};
  return parse_paths(in, format);
}

void write_paths(const PathCorpus& corpus, std::ostream& out, PathFormat format) {
  const auto& vocab = corpus.vocabulary();
  for (const auto& path : corpus.paths()) {
    auto emit = [&] {
      for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        if (i) out << ',';
        out << vocab.token(path.nodes[i]);
      }
    };
    if (format == PathFormat::ngram) {
      emit();
      out << ',' << path.multiplicity << '\n';
    } else {
      for (std::uint64_t m = 0; m < path.multiplicity; ++m) {
        emit();
        out << '\n';
      }
    }
  }
}

PathStats path_stats(const PathCorpus& corpus) {
  if (corpus.instance_count() == 0) throw ArgumentError("path_stats on empty corpus");
  PathStats stats;
  double weighted = 0.0;
  for (const auto& p : corpus.paths()) {
    stats.length_histogram[p.nodes.size()] += p.multiplicity;
    stats.path_count += p.multiplicity;
    weighted += static_cast<double>(p.multiplicity) * static_cast<double>(p.nodes.size());
  }
  stats.mean_length = weighted / static_cast<double>(stats.path_count);
  stats.mean_transitions = stats.mean_length - 1.0;
  return stats;
}

std::map<std::string, std::uint64_t> visit_counts(const PathCorpus& corpus) {
  if (corpus.instance_count() == 0) throw ArgumentError("visit_counts on empty corpus");
  std::vector<std::uint64_t> counts(corpus.vocabulary().size(), 0);
  for (const auto& p : corpus.paths()) {
    for (NodeIndex n : p.nodes) counts[n] += p.multiplicity;
  }
  std::map<std::string, std::uint64_t> out;
  for (NodeIndex n : corpus.universe()) out.emplace(corpus.vocabulary().token(n), counts[n]);
  return out;
}

std::pair<PathCorpus, PathCorpus> split_corpus(const PathCorpus& corpus, double test_fraction,
                                               std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw ArgumentError("test fraction must lie in (0, 1)");
  }
  if (corpus.instance_count() < 2) throw ArgumentError("split needs at least two path instances");

  detail::Rng rng(seed);
  std::vector<Path> train;
  std::vector<Path> test;
  for (const auto& p : corpus.paths()) {
    std::uint64_t to_test = 0;
    for (std::uint64_t i = 0; i < p.multiplicity; ++i) {
      if (rng.unit() < test_fraction) ++to_test;
    }
    if (to_test > 0) test.push_back(Path{p.nodes, to_test});
    if (to_test < p.multiplicity) train.push_back(Path{p.nodes, p.multiplicity - to_test});
  }
  return {PathCorpus(corpus.shared_vocabulary(), std::move(train)),
          PathCorpus(corpus.shared_vocabulary(), std::move(test))};
}

}  // namespace honkit
