#include <catch2/catch_amalgamated.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string(SCMINE_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& content) {
    std::ofstream out(p, std::ios::binary);
    out << content;
}

void write_ppm(const fs::path& p, unsigned char r, unsigned char g,
               unsigned char b) {
    std::ofstream out(p, std::ios::binary);
    out << "P6\n1 1\n255\n";
    out.put(static_cast<char>(r));
    out.put(static_cast<char>(g));
    out.put(static_cast<char>(b));
}

struct Workspace {
    fs::path dir;
    Workspace() {
        dir = fs::temp_directory_path() /
              ("scmine_cli_" + std::to_string(::getpid()) + "_" +
               std::to_string(rand()));
        fs::create_directories(dir);
    }
    ~Workspace() { fs::remove_all(dir); }
};

// Two videos: "stable" repeats one color, "noisy" alternates colors.
fs::path make_detect_manifest(const Workspace& ws) {
    const auto stable = ws.dir / "stable";
    const auto noisy = ws.dir / "noisy";
    fs::create_directories(stable);
    fs::create_directories(noisy);
    for (int t = 0; t <= 30; t += 10) {
        write_ppm(stable / (std::to_string(t) + ".ppm"), 200, 30, 30);
        write_ppm(noisy / (std::to_string(t) + ".ppm"),
                  static_cast<unsigned char>(t * 8), 255, 10);
    }
    const auto manifest = ws.dir / "m.jsonl";
    write_file(manifest,
               "{\"id\":\"stable\",\"kind\":\"dev-screencast\",\"frame_dir\":\"" +
                   stable.string() + "\",\"title\":\"a\"}\n"
                   "{\"id\":\"noisy\",\"kind\":\"other\",\"frame_dir\":\"" +
                   noisy.string() + "\",\"title\":\"b\"}\n");
    return manifest;
}

} // namespace

TEST_CASE("cli detect writes a ranking csv and is deterministic") {
    Workspace ws;
    const auto manifest = make_detect_manifest(ws);
    const auto out = ws.dir / "ranks.csv";
    const std::string args = "detect --manifest " + manifest.string() +
                             " --algorithm cosine --interval 10 --out " +
                             out.string();
    REQUIRE(run_cli(args) == 0);
    const auto content = slurp(out);
    REQUIRE(run_cli(args) == 0);
    CHECK(content == slurp(out)); // byte-identical rerun
    CHECK(content.find("# config") == 0);
    CHECK(content.find("video_id,algorithm,score,rank") != std::string::npos);
    // identical frames pin the stable video to rank 1
    CHECK(content.find("stable,cosine,1,1") != std::string::npos);
}

TEST_CASE("cli eval-detect reports precision and recall") {
    Workspace ws;
    const auto manifest = make_detect_manifest(ws);
    const auto ranks = ws.dir / "ranks.csv";
    REQUIRE(run_cli("detect --manifest " + manifest.string() +
                    " --algorithm cosine --interval 10 --out " +
                    ranks.string()) == 0);

    const auto out = ws.dir / "eval.json";
    REQUIRE(run_cli("eval-detect --manifest " + manifest.string() +
                    " --ranks " + ranks.string() + " --k 1 --out " +
                    out.string()) == 0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.at("config").at("command") == "eval-detect");
    CHECK(doc.at("rows")[0].at("recall") == 1.0);
    CHECK(doc.at("rows")[0].at("precision") == 1.0);
}

TEST_CASE("cli topics output is byte-identical for a fixed seed") {
    Workspace ws;
    const auto corpus = ws.dir / "c.jsonl";
    std::ostringstream rows;
    for (int i = 0; i < 8; ++i)
        rows << R"({"id":"a)" << i
             << R"(","text":"database table mysql query insert row column"})"
             << "\n";
    for (int i = 0; i < 8; ++i)
        rows << R"({"id":"b)" << i
             << R"(","text":"game sprite player level score enemy screen"})"
             << "\n";
    write_file(corpus, rows.str());

    const auto out = ws.dir / "topics.json";
    const std::string args = "topics --corpus " + corpus.string() +
                             " --kmax 4 --iters 60 --seed 7 --out " +
                             out.string();
    REQUIRE(run_cli(args) == 0);
    const auto first = slurp(out);
    REQUIRE(run_cli(args) == 0);
    CHECK(first == slurp(out));

    const auto doc = nlohmann::json::parse(first);
    CHECK(doc.at("config").at("seed") == 7);
    CHECK(doc.at("K").get<int>() >= 2);
    CHECK(doc.at("topics").size() == doc.at("K").get<std::size_t>());
}

TEST_CASE("cli link honors the 0.12 default threshold end to end") {
    Workspace ws;
    const auto docs = ws.dir / "docs";
    fs::create_directories(docs);
    write_file(docs / "arraylist.html",
               "<body><h1>ArrayList</h1><p>contains add remove size "
               "iterator</p></body>");
    write_file(docs / "hashmap.html",
               "<body><h1>HashMap</h1><p>put get key value entry</p></body>");
    write_file(docs / "scanner.html",
               "<body><h1>Scanner</h1><p>input read next line token</p></body>");
    const auto transcript = ws.dir / "t.txt";
    write_file(transcript,
               "today we use an arraylist and check if it contains a value");

    const auto out = ws.dir / "links.json";
    REQUIRE(run_cli("link --docs " + docs.string() + " --transcript " +
                    transcript.string() + " --top 2 --out " + out.string()) ==
            0);
    const auto doc = nlohmann::json::parse(slurp(out));
    CHECK(doc.at("config").at("tau") == 0.12);
    const auto& result = doc.at("results")[0];
    CHECK(result.at("tau") == 0.12);
    REQUIRE(result.at("ranking").size() == 2);
    CHECK(result.at("ranking")[0].at("doc_id") == "arraylist");

    // eval-link over the produced results
    const auto judgments = ws.dir / "j.jsonl";
    write_file(judgments,
               R"({"screencast_id":"t","relevant_doc_ids":["arraylist"]})"
               "\n");
    const auto eval_out = ws.dir / "eval.json";
    REQUIRE(run_cli("eval-link --results " + out.string() + " --judgments " +
                    judgments.string() + " --ks 1,2 --out " +
                    eval_out.string()) == 0);
    const auto eval_doc = nlohmann::json::parse(slurp(eval_out));
    CHECK(eval_doc.at("config").at("tau") == 0.12);
    CHECK(eval_doc.at("rows")[0].at("micro_recall") == 1.0);
}

TEST_CASE("cli exit codes distinguish usage, validation and I/O errors") {
    Workspace ws;
    CHECK(run_cli("frobnicate") == 2);              // unknown command
    CHECK(run_cli("detect --manifest x") == 2);     // missing required flag
    CHECK(run_cli("detect --manifest " + (ws.dir / "nope.jsonl").string() +
                  " --out " + (ws.dir / "o.csv").string()) == 1); // I/O

    const auto bad = ws.dir / "bad.jsonl";
    write_file(bad, "{\"id\":\"v1\",\"kind\":\"bogus-kind\",\"frame_dir\":\"" +
                        ws.dir.string() + "\",\"title\":\"\"}\n");
    CHECK(run_cli("detect --manifest " + bad.string() + " --out " +
                  (ws.dir / "o.csv").string()) == 2); // validation
}
