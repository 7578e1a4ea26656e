#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include <qseries/cli.hpp>

namespace
{

struct result {
    int code;
    std::string out;
    std::string err;
};

result run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = qseries::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Coeff)
{
    EXPECT_EQ(run({"coeff", "a", "8"}).out, "54\n");
    EXPECT_EQ(run({"coeff", "p", "24"}).out, "1575\n");
    EXPECT_EQ(run({"coeff", "a", "8", "--modulus", "5"}).out, "4\n");
    EXPECT_EQ(run({"coeff", "b", "8"}).code, 2);
}

TEST(Cli, VerifyJson)
{
    const auto r = run({"verify", "chan-3", "lemma-4.1", "--terms", "30", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_EQ(j[0]["id"], "chan-3");
    EXPECT_EQ(j[0]["status"], "verified");
    EXPECT_EQ(j[0]["terms_checked"], 30);
    EXPECT_TRUE(j[0]["first_mismatch"].is_null());
    EXPECT_TRUE(j[0]["notes"].is_null());
    EXPECT_TRUE(j[1]["notes"].is_string());
    for (const auto &obj : j) {
        for (const char *key : {"id", "terms_checked", "status", "first_mismatch", "notes", "elapsed_ms"}) {
            EXPECT_TRUE(obj.contains(key)) << key;
        }
    }
}

TEST(Cli, VerifyAllJson)
{
    const auto r = run({"verify", "--all", "--terms", "20", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_GE(j.size(), 16u);
    const auto cases = qseries::registry();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        EXPECT_EQ(j[i]["id"], cases[i].id);
    }
}

TEST(Cli, VerifyErrors)
{
    const auto r = run({"verify", "no-such-id"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown identity"), std::string::npos);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"verify"}).code, 2);
    EXPECT_EQ(run({"verify", "chan-3", "--terms", "0"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, VerifyText)
{
    const auto r = run({"verify", "lemma-4.1", "--terms", "10"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("lemma-4.1 verified terms=10"), std::string::npos);
    EXPECT_NE(r.out.find("note:"), std::string::npos);
}

TEST(Cli, Series)
{
    const auto r = run({"series", "1/eta(1)", "--terms", "6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "0 1\n1 1\n2 2\n3 3\n4 5\n5 7\n");

    const auto m = run({"series", "1/eta(1)", "--terms", "6", "--modulus", "2", "--json"});
    ASSERT_EQ(m.code, 0);
    const auto j = nlohmann::json::parse(m.out);
    EXPECT_EQ(j["modulus"], 2);
    EXPECT_EQ(j["coefficients"], (nlohmann::json{"1", "1", "0", "1", "1", "1"}));
}

TEST(Cli, SeriesErrors)
{
    const auto r = run({"series", "E(1,1", "--terms", "5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("offset 6"), std::string::npos);
    EXPECT_TRUE(r.out.empty());

    const auto u = run({"series", "1/(2*eta(1))", "--terms", "5"});
    EXPECT_EQ(u.code, 2);
    EXPECT_NE(u.err.find("non-unit"), std::string::npos);
}

TEST(Cli, Dissect)
{
    const auto r = run({"dissect", "1/(eta(1)*eta(2))", "9", "8", "--terms", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    // a(8), a(17), a(26)
    const auto a = qseries::a_series(26);
    EXPECT_EQ(r.out, "0 " + a[8].get_str() + "\n1 " + a[17].get_str() + "\n2 " + a[26].get_str() + "\n");
    EXPECT_EQ(run({"dissect", "eta(1)", "3", "3"}).code, 2);
}

TEST(Cli, List)
{
    const auto r = run({"list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("chan-3\tseries\t"), std::string::npos);
    EXPECT_NE(r.out.find("lemma-4.1\tsymbolic\t"), std::string::npos);
    EXPECT_NE(r.out.find("congruence-a27\tcongruence\t"), std::string::npos);
}
