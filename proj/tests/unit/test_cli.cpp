/*
 * Copyright 2026 The horadam Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "app.hpp"
#include "horadam/numeric.hpp"
#include "horadam/real.hpp"

using horadam::cli::run;

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result horadam_run(std::vector<std::string> args)
{
    args.insert(args.begin(), "horadam");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
    {
        out.push_back(line);
    }
    return out;
}

/// A printed number survives parse -> render unchanged.
void check_round_trip(const std::string& text, horadam::PrecisionBits bits)
{
    CAPTURE(text);
    const horadam::Rational value = horadam::parse_rational(text);
    if (text.find('e') == std::string::npos)
    {
        CHECK(horadam::to_string(value) == text);
        return;
    }
    const horadam::Real real(value, bits);
    CHECK(real.str(horadam::Real::digits_for(bits)) == text);
}

}  // namespace

TEST_CASE("term examples")
{
    auto r = horadam_run({"term", "--spec", "0,0,1", "--params", "1,3,9", "--n", "6", "--method", "all"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 4);
    CHECK(l[0] == "iter    37");
    CHECK(l[1] == "matrix  37");
    CHECK(l[2].rfind("binet   3.7000000000", 0) == 0);
    CHECK(l[3] == "verdict agree");

    r = horadam_run({"term", "--spec", "0,0,1", "--params", "1,3,9", "--n", "0", "--method", "iter"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    r = horadam_run({"term", "--spec", "0,1,1", "--params", "1,1,1", "--n", "10", "--method", "matrix"});
    CHECK(r.code == 0);
    CHECK(r.out == "149\n");

    r = horadam_run({"term", "--spec", "1/2,2,3", "--params", "1,3,9", "--n", "0", "--method", "matrix"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/2\n");

    r = horadam_run({"term", "--spec=-1,0.5,1e1", "--params", "1,3,9", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "5/2\n");
}

TEST_CASE("term errors map to exit codes")
{
    CHECK(horadam_run({"term", "--spec", "0,0", "--params", "1,3,9", "--n", "3"}).code == 2);
    CHECK(horadam_run({"term", "--spec", "0,0,x", "--params", "1,3,9", "--n", "3"}).code == 2);
    CHECK(horadam_run({"term", "--spec", "0,0,1", "--params", "1,3,9", "--n", "-3"}).code == 2);
    CHECK(horadam_run({"term", "--spec", "0,0,1", "--params", "1,3,9", "--n", "3", "--method", "fast"}).code == 2);
    CHECK(horadam_run({"term", "--spec", "0,0,1", "--params", "1,3,9"}).code == 2);
    CHECK(horadam_run({"term", "--spec", "0,0,1", "--params", "0,0,0", "--n", "3", "--method", "binet"}).code == 3);
    CHECK(horadam_run({"frobnicate"}).code == 2);
    CHECK(horadam_run({}).code == 2);
    CHECK(horadam_run({"--help"}).code == 0);
}

TEST_CASE("geomean examples")
{
    auto r = horadam_run({"geomean", "--n", "5", "--mode", "exponents"});
    CHECK(r.code == 0);
    CHECK(r.out == "a^4 b^7 c^16 / 3^3\n");

    r = horadam_run({"geomean", "--init", "7,7,7", "--n", "30", "--mode", "value"});
    CHECK(r.code == 0);
    CHECK(horadam::parse_rational(lines(r.out).at(0)) == 7);

    r = horadam_run({"geomean", "--init", "2,3,5", "--n", "60", "--mode", "trace"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 62);
    CHECK(l[0] == "n,ratio,deviation");
    const std::string last = l.back();
    CHECK(last.rfind("60,", 0) == 0);
    const auto deviation = last.substr(last.rfind(',') + 1);
    CHECK(horadam::parse_rational(deviation) < horadam::Rational(1, 1000000));

    CHECK(horadam_run({"geomean", "--init", "0,1,1", "--n", "3", "--mode", "value"}).code == 3);
    CHECK(horadam_run({"geomean", "--init", "1,-1,1", "--n", "3", "--mode", "trace"}).code == 3);
    CHECK(horadam_run({"geomean", "--n", "3", "--mode", "value"}).code == 2);
}

TEST_CASE("verify examples")
{
    auto r = horadam_run({"verify", "--all", "--cases", "50", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).size() >= 600);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = horadam_run({"verify", "--id", "PROP2", "--lambda", "2", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "PROP2\tlambda=2;n=4\t4\t4\tPASS\n");

    r = horadam_run({"verify", "--id", "I1", "--n", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "I1\tn=1\t0\t0\tPASS\n");

    CHECK(horadam_run({"verify", "--id", "NOPE"}).code == 2);
    CHECK(horadam_run({"verify"}).code == 2);
    CHECK(horadam_run({"verify", "--all", "--id", "I1"}).code == 2);
    CHECK(horadam_run({"verify", "--id", "PROP1", "--n", "4"}).code == 2);
    CHECK(horadam_run({"verify", "--id", "PROP1", "--lambda", "2", "--n", "1"}).code == 2);
    CHECK(horadam_run({"verify", "--id", "PROP1", "--lambda", "0", "--n", "3"}).code == 3);
    CHECK(horadam_run({"verify", "--all", "--cases", "0"}).code == 2);
}

TEST_CASE("verify single checks for every identity")
{
    const std::vector<std::vector<std::string>> cases{
        {"--id", "E4_ADDITION", "--spec", "2,-1,3", "--params", "1,2,5", "--n", "4", "--m", "3"},
        {"--id", "E5_SQUARE_H", "--params", "1,3,9", "--n", "3"},
        {"--id", "E6_SQUARE_HORADAM", "--spec", "1,2,3", "--params", "1,3,9", "--n", "2"},
        {"--id", "I2", "--n", "4"},
        {"--id", "I3", "--n", "0"},
        {"--id", "PROP1", "--lambda", "1/3", "--n", "4"},
        {"--id", "SIMILARITY_N10", "--lambda", "-5/7"},
        {"--id", "REMARK_TRIB", "--n", "9"},
        {"--id", "REMARK_LAMBDA1", "--n", "9"},
        {"--id", "D_SEQ_PROOF2", "--lambda", "2", "--n", "5"},
    };
    for (auto args : cases)
    {
        args.insert(args.begin(), "verify");
        CAPTURE(args[2]);
        const auto r = horadam_run(args);
        CHECK(r.code == 0);
        CHECK(r.out.find("\tPASS\n") != std::string::npos);
    }
}

TEST_CASE("verify output is deterministic for a fixed seed")
{
    const auto a = horadam_run({"--seed", "123", "verify", "--all", "--cases", "5"});
    const auto b = horadam_run({"verify", "--all", "--cases", "5", "--seed", "123"});
    const auto c = horadam_run({"verify", "--all", "--cases", "5", "--seed", "124"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("roots examples")
{
    auto r = horadam_run({"roots", "--params", "1,3,9"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 7);
    CHECK(l[0] == "delta           24");
    CHECK(l[1].find("3.000000000000000000000000000000000000000e+00") != std::string::npos);
    CHECK(l[2].find("-1.000000000000000000000000000000000000000e+00 + 1.41421356237309504880")
          != std::string::npos);
    CHECK(l[3].find(" - 1.41421356237309504880") != std::string::npos);

    r = horadam_run({"roots", "--params", "1,1,1", "--format", "json-lines"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(lines(r.out).at(0));
    CHECK(j["delta"] == "11/27");
    CHECK(j["alpha"].get<std::string>().rfind("1.83928675521416113255", 0) == 0);

    r = horadam_run({"roots", "--params", "0,0,0"});
    CHECK(r.code == 3);
    CHECK(r.err.find("delta > 0") != std::string::npos);
    CHECK(r.err.find("discriminant 0") != std::string::npos);
    CHECK(horadam_run({"roots", "--params", "6,-11,6"}).code == 3);
}

TEST_CASE("bench examples")
{
    auto r = horadam_run({"bench", "--n", "1000,10000", "--methods", "iter,matrix"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "method,n,wall_time,result_bit_length,matrix_mults,mult_bound");
    const auto bits_of = [](const std::string& row) {
        std::vector<std::string> cells;
        std::stringstream ss(row);
        for (std::string cell; std::getline(ss, cell, ',');)
        {
            cells.push_back(cell);
        }
        return cells;
    };
    CHECK(bits_of(l[1])[3] == bits_of(l[3])[3]);
    CHECK(bits_of(l[2])[3] == bits_of(l[4])[3]);
    CHECK(bits_of(l[3])[4] == "16");

    r = horadam_run({"bench", "--n", "1", "--methods", "matrix", "--format", "json-lines"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(lines(r.out).at(0));
    CHECK(j["matrix_mults"] == 0);
    CHECK(j["result_bit_length"] == 0);

    CHECK(horadam_run({"bench", "--n", "100001", "--methods", "iter"}).code == 2);
    CHECK(horadam_run({"bench", "--n", "10000001", "--methods", "matrix"}).code == 2);
    CHECK(horadam_run({"bench", "--n", "0", "--methods", "matrix"}).code == 2);
    CHECK(horadam_run({"bench", "--n", "10", "--methods", "kitamasa"}).code == 2);
}

TEST_CASE("json-lines numbers round-trip")
{
    const horadam::PrecisionBits bits = 96;
    const std::vector<std::vector<std::string>> commands{
        {"term", "--spec", "1/3,-2,5/7", "--params", "1,3,9", "--n", "12", "--method", "all"},
        {"geomean", "--n", "7", "--mode", "exponents"},
        {"geomean", "--init", "2,3,5", "--n", "9", "--mode", "value"},
        {"geomean", "--init", "2,3,5", "--n", "20", "--mode", "trace"},
        {"roots", "--params", "2,5,7"},
        {"verify", "--all", "--cases", "2"},
    };
    for (auto args : commands)
    {
        args.insert(args.begin(), {"--format", "json-lines", "--precision", std::to_string(bits)});
        const auto r = horadam_run(args);
        CAPTURE(args[4]);
        REQUIRE(r.code == 0);
        for (const auto& line : lines(r.out))
        {
            const auto j = nlohmann::json::parse(line);
            for (const auto& [key, value] : j.items())
            {
                if (key == "method" || key == "text" || key == "identity_id")
                {
                    continue;
                }
                if (value.is_string())
                {
                    check_round_trip(value.get<std::string>(), bits);
                }
                else if (value.is_array())
                {
                    for (const auto& item : value)
                    {
                        check_round_trip(item.get<std::string>(), bits);
                    }
                }
            }
        }
    }
}

TEST_CASE("csv output quotes fractions")
{
    auto r = horadam_run({"--format", "csv", "term", "--spec", "1/3,0,0", "--params", "1,3,9", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "method,n,value\niter,3,\"3\"\n");

    r = horadam_run({"--format", "csv", "verify", "--id", "E5_SQUARE_H", "--params", "1/2,3,9", "--n", "3"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "identity_id,inputs,lhs,rhs,pass");
    CHECK(l[1].rfind("E5_SQUARE_H,\"params=1/2,3,9;n=3\",\"", 0) == 0);
    CHECK(l[1].substr(l[1].size() - 5) == ",true");

    r = horadam_run({"--format", "csv", "geomean", "--n", "4"});
    CHECK(r.out == "n,a,b,c,text\n4,\"1/9\",\"4/9\",\"4/9\",a^1 b^4 c^4 / 3^2\n");
}

TEST_CASE("precision flag and environment variable")
{
    auto r = horadam_run({"--precision", "32", "roots", "--params", "1,3,9"});
    CHECK(lines(r.out).at(1) == "alpha           3.0000000000e+00");
    CHECK(horadam_run({"--precision", "15", "roots", "--params", "1,3,9"}).code == 2);

    ::setenv(horadam::cli::kPrecisionEnv, "32", 1);
    r = horadam_run({"roots", "--params", "1,3,9"});
    CHECK(lines(r.out).at(1) == "alpha           3.0000000000e+00");
    r = horadam_run({"--precision", "64", "roots", "--params", "1,3,9"});
    CHECK(lines(r.out).at(1) == "alpha           3.00000000000000000000e+00");
    ::setenv(horadam::cli::kPrecisionEnv, "4", 1);
    CHECK(horadam_run({"roots", "--params", "1,3,9"}).code == 2);
    ::unsetenv(horadam::cli::kPrecisionEnv);
}
