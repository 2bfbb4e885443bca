#include "corpus.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace terminfer;
using namespace terminfer::testing;

namespace {

class Corpus : public ::testing::TestWithParam<std::string> {
protected:
    Analysis analysis() const { return run_pipeline(GetParam()); }
};

std::string file_name(const ::testing::TestParamInfo<std::string> &info) {
    return std::filesystem::path(info.param).stem().string();
}

} // namespace

TEST(CorpusTable, EveryRowHasAFile) {
    auto rows = load_expected();
    EXPECT_EQ(rows.size(), 27u);
    for (const auto &row : rows)
        EXPECT_TRUE(std::filesystem::exists(corpus_dir() + "/" + row.file)) << row.file;
}

TEST(CorpusTable, InferredConditionsMatch) {
    for (const auto &row : load_expected()) {
        auto a = run_pipeline(corpus_dir() + "/" + row.file);
        auto it = a.pre.map.find(row.pred);
        ASSERT_NE(it, a.pre.map.end()) << row.file;
        EXPECT_EQ(it->second, row.expected)
            << row.file << ": " << it->second.to_string() << " vs " << row.expected.to_string();
    }
}

TEST_P(Corpus, NumericModelIsPostFixpoint) {
    auto f = numeric_postfixpoint_failures(analysis());
    EXPECT_TRUE(f.empty()) << f.front();
}

TEST_P(Corpus, BooleanModelIsPostFixpoint) {
    auto f = boolean_postfixpoint_failures(analysis());
    EXPECT_TRUE(f.empty()) << f.front();
}

TEST_P(Corpus, LevelMappingsDecrease) {
    auto f = level_mapping_audit_failures(analysis());
    EXPECT_TRUE(f.empty()) << f.front();
}

TEST_P(Corpus, GfpCertificate) {
    auto f = gfp_certificate_failures(analysis());
    EXPECT_TRUE(f.empty()) << f.front();
}

TEST_P(Corpus, GfpMaximality) {
    auto f = gfp_maximality_failures(analysis());
    EXPECT_TRUE(f.empty()) << f.front();
}

// Each minimal model of an inferred condition, instantiated with random
// ground terms, must give a finite LD-tree.
TEST_P(Corpus, ConditionsHoldUnderSampling) {
    auto a = analysis();
    Rng rng(101);
    for (const auto &e : a.report.entries) {
        auto r = sample_condition(a.program, e.pred, e.pre, rng, 20);
        EXPECT_TRUE(r.clean()) << e.pred.to_string() << ": " << r.offenders.front();
    }
}

TEST_P(Corpus, RenderingIsStable) { EXPECT_EQ(analysis().report.to_string(), analysis().report.to_string()); }

INSTANTIATE_TEST_SUITE_P(Programs, Corpus, ::testing::ValuesIn(corpus_files()), file_name);
