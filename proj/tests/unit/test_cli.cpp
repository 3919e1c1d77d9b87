#include "doctest.h"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    std::string command = std::string(QWEINGARTEN_CLI) + " " + args + " 2>&1";
    Run result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.out.append(buffer.data(), got);
    }
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate") {
    auto r = run("enumerate --k 3 --count-only");
    CHECK(r.status == 0);
    CHECK(r.out.find("5") != std::string::npos);
    CHECK(run("enumerate --k 2").out.find("{(1,4),(2,3)}") != std::string::npos);
}

TEST_CASE("integrate prints exact values") {
    CHECK(run("integrate --n 2 --i 1,1,1,1 --j 1,1,1,1 --no-cache").out == "1/3\n");
    CHECK(run("integrate --n 5 --case unitary --word ab --i 1,1 --j 1,1 --no-cache").out == "1/5\n");
    CHECK(run("integrate --n 3 --i 1,1,1 --j 1,1,1 --no-cache").out == "0\n");
}

TEST_CASE("json output follows the schema") {
    auto r = run("--no-cache moments --s 1 --n 2 --max-k 3 --json");
    REQUIRE(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["schema"] == "qweingarten-output");
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "moments");
    CHECK(doc["payload"]["moments"][2]["value"] == "1/4");
    CHECK_FALSE(doc.contains("timing"));

    auto expand = nlohmann::json::parse(run("expand --k 2 --order 3 --json").out);
    CHECK(expand["payload"]["coefficients"] == nlohmann::json::array({"2", "-2", "2", "-2"}));
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const char* args : {"expand --k 3 --order 3 --json", "integrate --n 4 --i 1,2,2,1 --j 1,1,2,2 --json --no-cache",
                             "enumerate --word abab"}) {
        CAPTURE(args);
        CHECK(run(args).out == run(args).out);
    }
}

TEST_CASE("errors exit with status 2") {
    auto r = run("integrate --n 2 --i 3,1 --j 1,1 --no-cache");
    CHECK(r.status == 2);
    CHECK(r.out.find("error:") == 0);
    CHECK(run("enumerate --k 11").status == 2);
    CHECK(run("enumerate --k 11 --max-half-size 12 --count-only").status == 0);
    CHECK(run("verify --suite nosuch").status != 0);
}

}
