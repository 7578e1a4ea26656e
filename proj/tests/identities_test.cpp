#include <set>
#include <string>

#include <gtest/gtest.h>

#include <qseries/identities.hpp>
#include <qseries/report_json.hpp>

using namespace qseries;

namespace
{

const identity_case &get(const std::vector<identity_case> &cases, const std::string &id)
{
    const auto *c = find_case(cases, id);
    if (c == nullptr) {
        throw std::runtime_error("missing case " + id);
    }
    return *c;
}

} // namespace

TEST(Registry, ContainsEveryStatement)
{
    const auto cases = registry();
    EXPECT_GE(cases.size(), 16u);
    std::set<std::string> ids;
    for (const auto &c : cases) {
        EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
        EXPECT_FALSE(c.description.empty());
        EXPECT_FALSE(c.citation.empty());
    }
    for (const char *id : {"ramanujan-5", "ramanujan-7", "zuckerman-25", "chan-3", "cubic-9", "lemma-2.2",
                           "lemma-2.3", "lemma-2.4-phi-psi", "lemma-2.4-xp", "lemma-4.1", "lemma-4.2-A",
                           "lemma-4.2-B", "lemma-4.2-C", "lemma-4.2-D", "lemma-4.2-E", "congruence-p5",
                           "congruence-p7", "congruence-a3", "congruence-a27"}) {
        EXPECT_TRUE(ids.count(id)) << id;
    }
}

TEST(Registry, ChanRightHandSide)
{
    const auto cases = registry();
    const auto &chan = get(cases, "chan-3");
    ASSERT_EQ(chan.rhs_terms.size(), 1u);
    EXPECT_EQ(chan.rhs_terms[0], (product_spec{3, 0, {{3, 3, 3}, {6, 6, 3}, {1, 1, -4}, {2, 2, -4}}}));
    EXPECT_EQ(eval_product_spec(chan.rhs_terms[0], 60), dissect(series(182, a_series(182).values), 3, 2));
}

TEST(Registry, LemmaCClosedForm)
{
    const auto cases = registry();
    const auto &c = get(cases, "lemma-4.2-C");
    ASSERT_EQ(c.rhs_terms.size(), 1u);
    EXPECT_EQ(c.rhs_terms[0], (product_spec{19 * 27, 8, {{9, 9, 8}, {18, 18, 8}}}));
    EXPECT_EQ(c.lhs(80), render_series(degree_part(residue_expansion(), 8), 80));
}

TEST(Registry, ClosedFormScalarsTripleIntoCubicNine)
{
    const auto cases = registry();
    const auto &nine = get(cases, "cubic-9");
    ASSERT_EQ(nine.rhs_terms.size(), 5u);
    const char *parts[] = {"lemma-4.2-A", "lemma-4.2-B", "lemma-4.2-C", "lemma-4.2-D", "lemma-4.2-E"};
    const long expected[] = {2 * 27, 8 * 27, 19 * 81, -64 * 27, 128 * 27};
    for (int i = 0; i < 5; ++i) {
        const auto &part = get(cases, parts[i]);
        EXPECT_EQ(3 * part.rhs_terms[0].scalar, nine.rhs_terms[i].scalar) << parts[i];
        EXPECT_EQ(nine.rhs_terms[i].scalar, expected[i]);
    }
}

TEST(Verify, ChanThreeAtTwoHundred)
{
    const auto cases = registry();
    const auto rep = verify(get(cases, "chan-3"), 200);
    EXPECT_EQ(rep.status, verification_status::verified);
    EXPECT_EQ(rep.terms_checked, 200u);
    EXPECT_FALSE(rep.first_mismatch);
}

TEST(Verify, PerturbedScalarIsCaught)
{
    const auto cases = registry();
    auto c = get(cases, "chan-3");
    c.rhs_terms[0].scalar += 1;
    const auto rep = verify(c, 10);
    EXPECT_EQ(rep.status, verification_status::mismatch);
    ASSERT_TRUE(rep.first_mismatch);
    EXPECT_EQ(rep.first_mismatch->index, 0u);
    EXPECT_EQ(rep.first_mismatch->lhs, "3");
    EXPECT_EQ(rep.first_mismatch->rhs, "4");
}

TEST(Verify, PerturbedShiftedTermReportsItsIndex)
{
    const auto cases = registry();
    auto c = get(cases, "cubic-9");
    c.rhs_terms[4].scalar -= 1; // the q^4 term
    const auto rep = verify(c, 12);
    ASSERT_EQ(rep.status, verification_status::mismatch);
    EXPECT_EQ(rep.first_mismatch->index, 4u);
}

TEST(Verify, CongruenceFailureIsReported)
{
    identity_case c;
    c.id = "bogus";
    c.kind = identity_kind::congruence;
    c.modulus = 4;
    c.lhs = [](std::size_t order) { return series(order, p_series(order).values); };
    const auto rep = verify(c, 10);
    EXPECT_EQ(rep.status, verification_status::mismatch);
    EXPECT_EQ(rep.first_mismatch->index, 0u);
    EXPECT_EQ(rep.first_mismatch->rhs, "0 mod 4");
}

TEST(Verify, BuilderFailureIsAnError)
{
    identity_case c;
    c.id = "broken";
    c.lhs = [](std::size_t order) { return invert(series(order)); };
    c.rhs = [](std::size_t order) { return series(order); };
    const auto rep = verify(c, 5);
    EXPECT_EQ(rep.status, verification_status::error);
    EXPECT_FALSE(rep.first_mismatch);
    ASSERT_TRUE(rep.notes);
    EXPECT_NE(rep.notes->find("constant term"), std::string::npos);

    const auto cases = registry();
    EXPECT_EQ(verify(get(cases, "chan-3"), 0).status, verification_status::error);
}

TEST(Verify, ResidueExpansionFlagsTranscription)
{
    const auto cases = registry();
    const auto rep = verify(get(cases, "lemma-4.1"), 60);
    EXPECT_EQ(rep.status, verification_status::verified);
    ASSERT_TRUE(rep.notes);
    EXPECT_NE(rep.notes->find("only in published: 152 * q^5 * F^7 X^3 P^4 S^4"), std::string::npos) << *rep.notes;
    EXPECT_NE(rep.notes->find("only in machine: 152 * q^5 * F^7 X^1 P^4 S^4"), std::string::npos) << *rep.notes;
}

TEST(Verify, PublishedTableDiffersOnlyInOneMonomial)
{
    const auto diffs = poly_diff(published_residue_terms(), residue_expansion());
    EXPECT_EQ(diffs.size(), 2u);
    EXPECT_EQ(published_residue_terms().size(), 27u);
}

TEST(Verify, MonotoneExactness)
{
    const auto cases = registry();
    for (const char *id : {"ramanujan-7", "chan-3", "lemma-2.3", "lemma-4.2-B"}) {
        const auto &c = get(cases, id);
        const auto small = c.lhs(40);
        const auto large = c.lhs(90);
        EXPECT_TRUE(equal_up_to(small, large, 40)) << id;
        EXPECT_EQ(verify(c, 41).status, verification_status::verified) << id;
    }
}

TEST(Verify, Deterministic)
{
    const auto cases = registry();
    const auto a = verify(get(cases, "ramanujan-5"), 50);
    const auto b = verify(get(cases, "ramanujan-5"), 50);
    EXPECT_EQ(a.status, b.status);
    EXPECT_EQ(a.terms_checked, b.terms_checked);
    EXPECT_EQ(a.notes, b.notes);
}

TEST(VerifyAll, OrderAndMinimalRun)
{
    const auto cases = registry();
    const auto reports = verify_all(cases, 1);
    ASSERT_EQ(reports.size(), cases.size());
    for (std::size_t i = 0; i < cases.size(); ++i) {
        EXPECT_EQ(reports[i].id, cases[i].id);
        EXPECT_EQ(reports[i].status, verification_status::verified) << cases[i].id;
        EXPECT_GE(reports[i].terms_checked, 1u);
    }
}

TEST(VerifyAll, HundredTerms)
{
    for (const auto &rep : verify_all(100)) {
        EXPECT_EQ(rep.status, verification_status::verified) << rep.id;
    }
}

TEST(ReportJson, Schema)
{
    verification_report r;
    r.id = "x";
    r.terms_checked = 3;
    r.status = verification_status::mismatch;
    r.first_mismatch = reported_mismatch{2, "123456789012345678901234567890", "0"};
    const auto j = to_json(r);
    EXPECT_EQ(j["id"], "x");
    EXPECT_EQ(j["terms_checked"], 3);
    EXPECT_EQ(j["status"], "mismatch");
    EXPECT_EQ(j["first_mismatch"]["index"], 2);
    EXPECT_EQ(j["first_mismatch"]["lhs"], "123456789012345678901234567890");
    EXPECT_TRUE(j["notes"].is_null());
    EXPECT_TRUE(j["elapsed_ms"].is_number());

    r.first_mismatch.reset();
    r.status = verification_status::verified;
    r.notes = "n";
    const auto k = to_json(r);
    EXPECT_TRUE(k["first_mismatch"].is_null());
    EXPECT_EQ(k["notes"], "n");
}
