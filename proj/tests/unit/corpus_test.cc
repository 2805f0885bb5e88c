#include "opinion_miner/corpus.h"

#include <gtest/gtest.h>

#include "opinion_miner/error.h"
#include "opinion_miner/text.h"
#include "test_support.h"

namespace opinion_miner {
namespace {

using testing::fixture;
using testing::TempDir;

ReviewDocument doc_with_text(std::string text) {
  ReviewDocument d;
  d.doc_id = "d";
  d.text = std::move(text);
  return d;
}

std::vector<std::string> surfaces(const Sentence &s) {
  std::vector<std::string> out;
  for (const Token &t : s.tokens) out.push_back(t.surface);
  return out;
}

std::string joined(const Sentence &s) {
  std::string out;
  for (const Token &t : s.tokens) out += (out.empty() ? "" : " ") + t.surface;
  return out;
}

TEST(Segmentation, MatchesHandSegmentedFixture) {
  auto doc = doc_with_text(read_file(fixture("segmentation/review.txt")));
  auto sentences = segment_sentences(doc);
  const std::string content = read_file(fixture("segmentation/review.expected"));
  std::vector<std::string> expected;
  for (auto line : split(content, '\n')) {
    if (!line.empty()) expected.emplace_back(line);
  }
  ASSERT_EQ(sentences.size(), expected.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(joined(sentences[i]), expected[i]);
    EXPECT_EQ(sentences[i].index, static_cast<int>(i));
  }
}

TEST(Segmentation, Examples) {
  EXPECT_EQ(segment_sentences(doc_with_text("Great phone. Bad battery!")).size(),
            2u);
  auto one = segment_sentences(doc_with_text("Camera is good"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(surfaces(one[0]),
            (std::vector<std::string>{"Camera", "is", "good"}));
  EXPECT_EQ(segment_sentences(doc_with_text("I paid $4.99 for it.")).size(),
            1u);
  EXPECT_TRUE(segment_sentences(doc_with_text("  ")).empty());
}

TEST(Segmentation, IdempotentOnSingleSentences) {
  auto doc = doc_with_text(read_file(fixture("segmentation/review.txt")));
  for (const Sentence &s : segment_sentences(doc)) {
    auto again = segment_sentences(doc_with_text(joined(s)));
    ASSERT_EQ(again.size(), 1u) << joined(s);
    EXPECT_EQ(surfaces(again[0]), surfaces(s));
  }
}

TEST(Segmentation, TokenPositionsAreSequential) {
  auto doc = doc_with_text("One two three. Four five.");
  for (const Sentence &s : segment_sentences(doc)) {
    for (size_t i = 0; i < s.tokens.size(); ++i) {
      EXPECT_EQ(s.tokens[i].position_in_sentence, static_cast<int>(i));
      EXPECT_EQ(s.tokens[i].normalized, to_lower(s.tokens[i].surface));
    }
  }
}

void write_doc(const TempDir &dir, const std::string &rel,
               const std::string &text) {
  std::filesystem::create_directories((dir / rel).parent_path());
  write_file(dir / rel, text);
}

TEST(LoadCorpus, CategoriesDocumentsAndLabels) {
  TempDir dir("corpus");
  write_doc(dir, "camera/c1.txt", "Great zoom. Weak <b>flash</b>.");
  write_doc(dir, "camera/c2.txt", "It ships in a box.");
  write_doc(dir, "phone/p1.txt", "The screen is sharp.");
  write_doc(dir, "phone/p2.txt", "Calls work.");
  write_file(dir / "labels.tsv", "c1\tS\np1 O\nghost\tS\n");

  LoadOptions options;
  options.labels_path = dir / "labels.tsv";
  Corpus c = load_corpus(dir.path(), options);
  EXPECT_EQ(c.size(), 4);
  EXPECT_EQ(c.categories, (std::vector<std::string>{"camera", "phone"}));
  ASSERT_NE(c.find("c1"), nullptr);
  EXPECT_EQ(c.find("c1")->label, Label::kSubjective);
  EXPECT_EQ(c.find("p1")->label, Label::kObjective);
  EXPECT_FALSE(c.find("c2")->label.has_value());
  EXPECT_EQ(tokenize(c.find("c1")->text),
            tokenize("Great zoom. Weak flash."));
  EXPECT_FALSE(c.find("c1")->parses.has_value());
  ASSERT_EQ(c.warnings.size(), 1u);
  EXPECT_NE(c.warnings[0].find("ghost"), std::string::npos);

  int words = 0;
  for (const ReviewDocument &d : c.documents) {
    int in_sentences = 0;
    for (const Sentence &s : d.sentences) in_sentences += s.tokens.size();
    EXPECT_EQ(d.word_count, in_sentences) << d.doc_id;
    EXPECT_EQ(d.word_count, static_cast<int>(tokenize(d.text).size()));
    words += d.word_count;
  }
  EXPECT_GT(words, 0);
}

TEST(LoadCorpus, DuplicateDocIdIsFatal) {
  TempDir dir("dup");
  write_doc(dir, "camera/x.txt", "A.");
  write_doc(dir, "phone/x.txt", "B.");
  EXPECT_THROW(load_corpus(dir.path()), InvalidArgument);
}

TEST(LoadCorpus, MissingRootIsIoError) {
  TempDir dir("missing");
  EXPECT_THROW(load_corpus(dir / "nope"), IoError);
}

TEST(LoadCorpus, MalformedLabelsReportLine) {
  TempDir dir("labels");
  write_doc(dir, "camera/c1.txt", "A.");
  write_file(dir / "labels.tsv", "c1\tS\nc1\tmaybe\n");
  LoadOptions options;
  options.labels_path = dir / "labels.tsv";
  try {
    load_corpus(dir.path(), options);
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(LoadCorpus, MiniCorpusShape) {
  LoadOptions options;
  options.labels_path = fixture("mini/labels.tsv");
  Corpus c = load_corpus(fixture("mini/corpus"), options);
  EXPECT_EQ(c.size(), 10);
  EXPECT_EQ(c.categories.size(), 3u);
  int sentences = 0;
  for (const ReviewDocument &d : c.documents) {
    sentences += d.sentences.size();
    EXPECT_TRUE(d.label.has_value()) << d.doc_id;
    if (d.parses) EXPECT_EQ(d.parses->size(), d.sentences.size()) << d.doc_id;
  }
  EXPECT_EQ(sentences, 40);
  EXPECT_FALSE(c.find("cam04")->parses.has_value());
  EXPECT_TRUE(c.warnings.empty());
}

TEST(IngestExport, RoundTripsThroughFiles) {
  LoadOptions options;
  options.labels_path = fixture("mini/labels.tsv");
  Corpus c = load_corpus(fixture("mini/corpus"), options);
  IngestExport e = format_ingest_export(c);

  TempDir dir("ingest");
  write_file(dir / "documents.tsv", e.documents_tsv);
  write_file(dir / "sentences.tsv", e.sentences_tsv);
  write_file(dir / "parses.dep", e.parses);
  Corpus back = read_ingest_export(dir.path());

  ASSERT_EQ(back.size(), c.size());
  EXPECT_EQ(back.categories, c.categories);
  for (int i = 0; i < c.size(); ++i) {
    const ReviewDocument &a = c.documents[i];
    const ReviewDocument &b = back.documents[i];
    EXPECT_EQ(a.doc_id, b.doc_id);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.word_count, b.word_count);
    ASSERT_EQ(a.sentences.size(), b.sentences.size());
    for (size_t s = 0; s < a.sentences.size(); ++s) {
      ASSERT_EQ(a.sentences[s].tokens.size(), b.sentences[s].tokens.size());
      for (size_t t = 0; t < a.sentences[s].tokens.size(); ++t) {
        EXPECT_EQ(a.sentences[s].tokens[t].surface,
                  b.sentences[s].tokens[t].surface);
        EXPECT_EQ(a.sentences[s].tokens[t].pos_tag,
                  b.sentences[s].tokens[t].pos_tag);
      }
    }
    ASSERT_EQ(a.parses.has_value(), b.parses.has_value());
    if (a.parses) {
      ASSERT_EQ(a.parses->size(), b.parses->size());
      for (size_t g = 0; g < a.parses->size(); ++g) {
        EXPECT_EQ((*a.parses)[g].edges, (*b.parses)[g].edges);
      }
    }
  }
  // Exporting the re-read corpus reproduces the files byte for byte.
  IngestExport again = format_ingest_export(back);
  EXPECT_EQ(again.documents_tsv, e.documents_tsv);
  EXPECT_EQ(again.sentences_tsv, e.sentences_tsv);
  EXPECT_EQ(again.parses, e.parses);
}

}  // namespace
}  // namespace opinion_miner
