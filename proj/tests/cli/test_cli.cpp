// Copyright the authorid authors. Licensed under the Apache 2.0 license. See LICENSE in the project root.
//
// End-to-end tests of the authorid binary. The executable path comes from the
// AUTHORID_CLI environment variable (set by CTest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string cli_path() {
    const char* path = std::getenv("AUTHORID_CLI");
    REQUIRE_MESSAGE(path != nullptr, "AUTHORID_CLI must point at the authorid binary");
    return path;
}

fs::path temp_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() /
                 ("authorid_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

CommandResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto out_path = temp_dir() / ("stdout_" + std::to_string(counter) + ".txt");
    const auto err_path = temp_dir() / ("stderr_" + std::to_string(counter) + ".txt");
    ++counter;

    const std::string command = "'" + cli_path() + "' " + args + " >'" + out_path.string() +
                                "' 2>'" + err_path.string() + "'";
    const int status = std::system(command.c_str());

    CommandResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

// Three authors, clearly separable vocabularies, enough messages to fold.
fs::path small_corpus() {
    static const fs::path path = [] {
        std::string lines;
        const char* vocab[3] = {"alpha bravo charlie", "delta echo foxtrot", "golf hotel india"};
        for (int a = 0; a < 3; ++a) {
            for (int m = 0; m < 8; ++m) {
                lines += "user" + std::to_string(a) + "\t" + vocab[a] + " msg" +
                         std::to_string(m) + "\n";
            }
        }
        const auto p = temp_dir() / "small_corpus.tsv";
        spit(p, lines);
        return p;
    }();
    return path;
}

}  // namespace

TEST_CASE("ingest plain: round trip with stage report") {
    const auto input = temp_dir() / "ingest_in.tsv";
    spit(input, "alice\thello there\nalice\thello there\nbob\tok\n");
    const auto output = temp_dir() / "ingest_out.tsv";

    const auto r = run_cli("ingest --input '" + input.string() + "' --format plain --output '" +
                           output.string() + "' --min-messages 1");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("parsed: 3 records, 2 authors") != std::string::npos);
    CHECK(r.err.find("dedupe: 2 records, 2 authors") != std::string::npos);
    CHECK(slurp(output) == "alice\thello there\nbob\tok\n");
}

TEST_CASE("ingest applies the min-messages threshold (default 50)") {
    const auto input = temp_dir() / "ingest_thin.tsv";
    std::string lines;
    for (int i = 0; i < 50; ++i) lines += "wordy\tmessage " + std::to_string(i) + "\n";
    lines += "quiet\tlone message\n";
    spit(input, lines);
    const auto output = temp_dir() / "ingest_thin_out.tsv";

    const auto r = run_cli("ingest --input '" + input.string() + "' --format plain --output '" +
                           output.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.err.find("min-messages(50): 50 records, 1 authors") != std::string::npos);
    CHECK(slurp(output).find("quiet") == std::string::npos);
}

TEST_CASE("ingest nus-xml converts to the plain format") {
    const auto input = temp_dir() / "corpus.xml";
    spit(input, R"(<smsCorpus>
  <message author="a1" type="text"><text>first message</text></message>
  <message author="a1" type="multimedia"><text>dropped.jpg</text></message>
  <message author="a2" type="text"><text>second  message</text></message>
</smsCorpus>)");
    const auto output = temp_dir() / "corpus.tsv";

    const auto r = run_cli("ingest --input '" + input.string() +
                           "' --format nus-xml --output '" + output.string() +
                           "' --min-messages 1");
    CHECK(r.exit_code == 0);
    CHECK(slurp(output) == "a1\tfirst message\na2\tsecond  message\n");
}

TEST_CASE("missing input file fails and names the path") {
    const auto r = run_cli("ingest --input /does/not/exist.tsv --format plain --output /tmp/x");
    CHECK(r.exit_code != 0);
    CHECK(r.err.find("/does/not/exist.tsv") != std::string::npos);
}

TEST_CASE("unknown flags are errors") {
    const auto r = run_cli("stats --input x --definitely-not-a-flag");
    CHECK(r.exit_code != 0);
}

TEST_CASE("stats reports per-author counts and lengths") {
    const auto r = run_cli("stats --input '" + small_corpus().string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("author,messages,chars_min,chars_median,chars_mean,chars_max\n") == 0);
    CHECK(r.out.find("user0,8,") != std::string::npos);
}

TEST_CASE("profile --text-file prints the serialized profile") {
    const auto input = temp_dir() / "sentence.txt";
    spit(input, "this is a test string for test");
    const auto r = run_cli("profile --text-file '" + input.string() + "'");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "a\t1\nfor\t1\nis\t1\nstring\t1\ntest\t2\nthis\t1\n");
}

TEST_CASE("profile --corpus writes a model usable by attribute") {
    const auto model = temp_dir() / "model.tsv";
    const auto r1 = run_cli("profile --corpus '" + small_corpus().string() + "' --model-out '" +
                            model.string() + "'");
    CHECK(r1.exit_code == 0);
    CHECK(!slurp(model).empty());

    const auto query = temp_dir() / "query.txt";
    spit(query, "echo delta echo");
    const auto r2 = run_cli("attribute --model '" + model.string() + "' --metric cosine '" +
                            query.string() + "'");
    CHECK(r2.exit_code == 0);
    CHECK(r2.out.find("rank,author_id,score\n") == 0);
    CHECK(r2.out.find("1,user1,") != std::string::npos);

    // Same invocation, same bytes.
    const auto r3 = run_cli("attribute --model '" + model.string() + "' --metric cosine '" +
                            query.string() + "'");
    CHECK(r3.out == r2.out);
}

TEST_CASE("attribute --stack groups query files") {
    const auto model = temp_dir() / "model2.tsv";
    run_cli("profile --corpus '" + small_corpus().string() + "' --model-out '" + model.string() +
            "'");
    std::string files;
    for (int i = 0; i < 4; ++i) {
        const auto q = temp_dir() / ("q" + std::to_string(i) + ".txt");
        spit(q, "golf india hotel");
        files += " '" + q.string() + "'";
    }
    const auto r = run_cli("attribute --model '" + model.string() + "' --stack 2" + files);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# stack 1: files 1-2\n") != std::string::npos);
    CHECK(r.out.find("# stack 2: files 3-4\n") != std::string::npos);
    CHECK(r.out.find("1,user2,") != std::string::npos);
}

TEST_CASE("experiment writes a deterministic results CSV") {
    const auto csv1 = temp_dir() / "result1.csv";
    const auto csv2 = temp_dir() / "result2.csv";
    const std::string base = "experiment --corpus '" + small_corpus().string() +
                             "' --metric cosine --stacks 1,2 --folds 2 --seed 7 --output '";

    const auto r1 = run_cli(base + csv1.string() + "'");
    CHECK(r1.exit_code == 0);
    CHECK(r1.out.find("accuracy=1") != std::string::npos);  // separable corpus
    const auto content = slurp(csv1);
    CHECK(content.find("experiment,metric,n_authors,train_per_author,selection,stack_size,fold,"
                       "trials,correct,accuracy\n") == 0);
    CHECK(content.find("custom,cosine,all,all,longest,1,ALL,") != std::string::npos);

    const auto r2 = run_cli(base + csv2.string() + "'");
    CHECK(r2.exit_code == 0);
    CHECK(slurp(csv2) == content);
}

TEST_CASE("experiment requires --seed") {
    const auto r = run_cli("experiment --corpus '" + small_corpus().string() +
                           "' --output /tmp/out.csv");
    CHECK(r.exit_code != 0);
    CHECK(r.err.find("--seed") != std::string::npos);
}

TEST_CASE("experiment rejects a preset combined with custom grid flags") {
    const auto r = run_cli("experiment --corpus '" + small_corpus().string() +
                           "' --output /tmp/out.csv --seed 1 --preset fig1 --metric cosine");
    CHECK(r.exit_code != 0);
}

TEST_CASE("experiment names the failing author on insufficient data") {
    const auto input = temp_dir() / "tiny.tsv";
    spit(input, "solo\tone\nsolo\ttwo\nsolo\tthree\n");
    const auto r = run_cli("experiment --corpus '" + input.string() +
                           "' --output /tmp/out.csv --seed 1 --stacks 1 --folds 10");
    CHECK(r.exit_code != 0);
    CHECK(r.err.find("error:") != std::string::npos);
}
