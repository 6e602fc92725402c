#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "durghotona/harvest/harvest.hpp"
#include "durghotona/harvest/site_config.hpp"
#include "durghotona/netfetch/file_transport.hpp"
#include "support/fakes.hpp"

using namespace durghotona;
using testing::FakeClock;
using testing::FakeTransport;

namespace {

const char* kMinimalConfig = R"js({
  "source_name": "Alpha Times",
  "listing_urls": ["https://alpha-times.example/news/accidents/"],
  "index_selectors": {
    "title": "div.headline h2 a::text",
    "link": "div.headline h2 a::attr(href)",
    "date": "div.headline span.date::text"
  }
})js";

netfetch::FetchOptions fast_options() {
    netfetch::FetchOptions options;
    options.user_agent = "durghotona-bot/0.1";
    options.per_host_delay = std::chrono::milliseconds{0};
    return options;
}

}  // namespace

TEST_CASE("load_site_config: minimal config gets defaults") {
    auto config = harvest::load_site_config(kMinimalConfig);
    CHECK(config.source_name == "Alpha Times");
    CHECK(config.max_pages == 1);
    CHECK(config.title_keywords.empty());
    CHECK_FALSE(config.article_body_selector.has_value());
}

TEST_CASE("load_site_config: missing link selector") {
    const char* broken = R"js({
      "source_name": "X",
      "listing_urls": ["https://x.example/a"],
      "index_selectors": {"title": "a::text", "date": "span::text"}
    })js";
    try {
        harvest::load_site_config(broken);
        FAIL("expected ConfigInvalid");
    } catch (const harvest::ConfigInvalid& e) {
        CHECK(e.field() == "index_selectors.link");
    }
}

TEST_CASE("load_site_config: malformed selector carries the syntax message") {
    const char* broken = R"js({
      "source_name": "X",
      "listing_urls": ["https://x.example/a"],
      "index_selectors": {"title": "div..x", "link": "a::attr(href)", "date": "span::text"}
    })js";
    try {
        harvest::load_site_config(broken);
        FAIL("expected ConfigInvalid");
    } catch (const harvest::ConfigInvalid& e) {
        CHECK(std::string(e.what()).find("selector syntax error") != std::string::npos);
    }
}

TEST_CASE("load_site_config: listing urls must share one host") {
    const char* broken = R"js({
      "source_name": "X",
      "listing_urls": ["https://x.example/a", "https://y.example/b"],
      "index_selectors": {"title": "a::text", "link": "a::attr(href)", "date": "span::text"}
    })js";
    CHECK_THROWS_AS(harvest::load_site_config(broken), harvest::ConfigInvalid);
    CHECK_THROWS_AS(harvest::load_site_config("not json"), harvest::ConfigInvalid);
    CHECK_THROWS_AS(harvest::load_site_config(R"js({"source_name": ""})js"),
                    harvest::ConfigInvalid);
}

TEST_CASE("harvest_index: fixture listing yields three entries in page order") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt", "", 404);
    transport.serve("https://alpha-times.example/news/accidents/", R"js(
      <div class="headline"><h2><a href="/news/accidents/one.html">Bus crash kills two</a></h2><span class="date">10 April 2024</span></div>
      <div class="headline"><h2><a href="/news/accidents/two.html">Truck overturns on highway</a></h2><span class="date">9 April 2024</span></div>
      <div class="headline"><h2><a href="three.html">Expert opinion on road accidents</a></h2><span class="date">8 April 2024</span></div>
    )js");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(kMinimalConfig);

    auto result = harvest::harvest_index(config, fetcher);
    REQUIRE(result.entries.size() == 3);
    CHECK(result.entries[0].title == "Bus crash kills two");
    CHECK(result.entries[0].link == "https://alpha-times.example/news/accidents/one.html");
    CHECK(result.entries[0].publish_date == "10 April 2024");
    CHECK(result.entries[0].source == "Alpha Times");
    CHECK(result.entries[1].title == "Truck overturns on highway");
    // relative href resolves against the listing URL
    CHECK(result.entries[2].link == "https://alpha-times.example/news/accidents/three.html");
    CHECK(result.warnings.empty());
}

TEST_CASE("harvest_index: keyword filter keeps matching titles only") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt", "", 404);
    transport.serve("https://alpha-times.example/news/accidents/", R"js(
      <div class="headline"><h2><a href="/a.html">Bus ACCIDENT on bridge</a></h2><span class="date">d1</span></div>
      <div class="headline"><h2><a href="/b.html">Parliament session resumes</a></h2><span class="date">d2</span></div>
      <div class="headline"><h2><a href="/c.html">Two killed in collision</a></h2><span class="date">d3</span></div>
    )js");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(kMinimalConfig);
    config.title_keywords = {"accident", "killed"};

    auto result = harvest::harvest_index(config, fetcher);
    REQUIRE(result.entries.size() == 2);
    CHECK(result.entries[0].title == "Bus ACCIDENT on bridge");
    CHECK(result.entries[1].title == "Two killed in collision");
}

TEST_CASE("harvest_index: zero matches is a valid empty result") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt", "", 404);
    transport.serve("https://alpha-times.example/news/accidents/", "<p>no headlines here</p>");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto result = harvest::harvest_index(harvest::load_site_config(kMinimalConfig), fetcher);
    CHECK(result.entries.empty());
    CHECK(result.warnings.empty());
}

TEST_CASE("harvest_index: mismatched selector lengths truncate with warning") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt", "", 404);
    // three titles/links but only two dates
    transport.serve("https://alpha-times.example/news/accidents/", R"js(
      <div class="headline"><h2><a href="/a.html">T1</a></h2><span class="date">d1</span></div>
      <div class="headline"><h2><a href="/b.html">T2</a></h2><span class="date">d2</span></div>
      <div class="headline"><h2><a href="/c.html">T3</a></h2></div>
    )js");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto result = harvest::harvest_index(harvest::load_site_config(kMinimalConfig), fetcher);
    REQUIRE(result.entries.size() == 2);
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].message.find("truncating to 2") != std::string::npos);
}

TEST_CASE("harvest_index: unreachable page is skipped with warning") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt", "", 404);
    for (int i = 0; i < 3; ++i) {
        transport.fail_once("https://alpha-times.example/news/accidents/");
    }
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto result = harvest::harvest_index(harvest::load_site_config(kMinimalConfig), fetcher);
    CHECK(result.entries.empty());
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].stage == "harvest-index");
}

TEST_CASE("harvest_index: robots-blocked listing warns instead of throwing") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt",
                    "User-agent: *\nDisallow: /news/\n");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto result = harvest::harvest_index(harvest::load_site_config(kMinimalConfig), fetcher);
    CHECK(result.entries.empty());
    REQUIRE(result.warnings.size() == 1);
    CHECK(result.warnings[0].message.find("robots") != std::string::npos);
}

TEST_CASE("harvest_index: max_pages caps listing fetches") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://g.example/robots.txt", "", 404);
    transport.serve("https://g.example/p1", R"js(<div class="headline"><h2><a href="/a.html">Accident A</a></h2><span class="date">d</span></div>)js");
    transport.serve("https://g.example/p2", R"js(<div class="headline"><h2><a href="/b.html">Accident B</a></h2><span class="date">d</span></div>)js");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(R"js({
      "source_name": "G",
      "listing_urls": ["https://g.example/p1", "https://g.example/p2"],
      "index_selectors": {
        "title": "div.headline h2 a::text",
        "link": "div.headline h2 a::attr(href)",
        "date": "div.headline span.date::text"
      },
      "max_pages": 1
    })js");
    auto result = harvest::harvest_index(config, fetcher);
    CHECK(result.entries.size() == 1);
    CHECK(transport.count_for("https://g.example/p2") == 0);
}

TEST_CASE("fetch_article: explicit body selector extracts exact paragraphs") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://alpha-times.example/robots.txt", "", 404);
    transport.serve("https://alpha-times.example/news/accidents/one.html", R"js(
      <nav><ul><li><a href="/">Home</a></li></ul></nav>
      <div class="story-body"><p>First para.</p><p>Second para.</p></div>
    )js");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(kMinimalConfig);
    config.article_body_selector = markup::parse_selector("div.story-body p::text");

    harvest::NewsIndexEntry entry{"t", "https://alpha-times.example/news/accidents/one.html",
                                  "d", "Alpha Times"};
    auto article = harvest::fetch_article(entry, config, fetcher);
    CHECK(article.body == "First para.\n\nSecond para.");
}

TEST_CASE("fetch_article: heuristic picks the paragraph-dense story, not nav") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://beta-herald.example/robots.txt", "", 404);
    transport.serve("https://beta-herald.example/news/x.html", R"js(
      <nav><ul><li><a href="/">Front</a></li><li><a href="/latest/">Latest</a></li></ul></nav>
      <div class="article">
        <h1>Headline</h1>
        <p>Story paragraph one with enough text to matter.</p>
        <p>Story paragraph two, also substantial.</p>
        <p>Story paragraph three.</p>
        <p>Story paragraph four.</p>
      </div>
      <footer><span>footer text</span></footer>
    )js");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(kMinimalConfig);
    config.article_body_selector.reset();

    harvest::NewsIndexEntry entry{"t", "https://beta-herald.example/news/x.html", "d", "B"};
    auto article = harvest::fetch_article(entry, config, fetcher);
    CHECK(article.body ==
          "Story paragraph one with enough text to matter.\n\n"
          "Story paragraph two, also substantial.\n\n"
          "Story paragraph three.\n\nStory paragraph four.");
    CHECK(article.body.find("Front") == std::string::npos);
    CHECK(article.body.find("footer") == std::string::npos);
}

TEST_CASE("fetch_article: no paragraphs and no selector raises EmptyBody") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://h.example/robots.txt", "", 404);
    transport.serve("https://h.example/bare.html", "<div><span>only spans</span></div>");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(kMinimalConfig);
    config.article_body_selector.reset();

    harvest::NewsIndexEntry entry{"t", "https://h.example/bare.html", "d", "X"};
    CHECK_THROWS_AS(harvest::fetch_article(entry, config, fetcher), harvest::EmptyBody);
}

TEST_CASE("fetch_article: selector matching nothing raises EmptyBody") {
    FakeClock clock;
    FakeTransport transport(&clock);
    transport.serve("https://h.example/robots.txt", "", 404);
    transport.serve("https://h.example/x.html", "<p>text outside the selector</p>");
    netfetch::Fetcher fetcher(transport, clock, fast_options());
    auto config = harvest::load_site_config(kMinimalConfig);
    config.article_body_selector = markup::parse_selector("div.story-body p::text");

    harvest::NewsIndexEntry entry{"t", "https://h.example/x.html", "d", "X"};
    CHECK_THROWS_AS(harvest::fetch_article(entry, config, fetcher), harvest::EmptyBody);
}

TEST_CASE("dedup_entries: stable first-occurrence semantics") {
    harvest::NewsIndexEntry a{"a", "https://h.example/a", "d", "s"};
    harvest::NewsIndexEntry b{"b", "https://h.example/b", "d", "s"};
    harvest::NewsIndexEntry a2{"a-again", "https://h.example/a", "d2", "s"};

    auto deduped = harvest::dedup_entries({a, b, a2});
    REQUIRE(deduped.size() == 2);
    CHECK(deduped[0].title == "a");
    CHECK(deduped[1].title == "b");

    CHECK(harvest::dedup_entries({}).empty());
    auto untouched = harvest::dedup_entries({a, b});
    REQUIRE(untouched.size() == 2);
    CHECK(untouched[0] == a);
    CHECK(untouched[1] == b);
    // idempotent
    CHECK(harvest::dedup_entries(deduped) == deduped);
}

TEST_CASE("harvest over committed fixtures: sources carry exactly their labels") {
    netfetch::FileTransport transport(std::filesystem::path(DURGHOTONA_FIXTURES_DIR) / "www");
    FakeClock clock;
    netfetch::Fetcher fetcher(transport, clock, fast_options());

    std::vector<std::string> configs = {"alpha_times.json", "beta_herald.json",
                                        "gamma_post.json"};
    std::vector<harvest::NewsIndexEntry> index;
    for (const auto& name : configs) {
        std::ifstream in(std::filesystem::path(DURGHOTONA_FIXTURES_DIR) / "sites" / name);
        std::stringstream buffer;
        buffer << in.rdbuf();
        auto config = harvest::load_site_config(buffer.str());
        auto result = harvest::harvest_index(config, fetcher);
        CHECK(result.warnings.empty());
        index.insert(index.end(), result.entries.begin(), result.entries.end());
    }
    index = harvest::dedup_entries(index);

    std::set<std::string> labels;
    for (const auto& entry : index) labels.insert(entry.source);
    CHECK(labels == std::set<std::string>{"Alpha Times", "Beta Herald", "Gamma Post"});
    // 4 alpha + 4 beta (2 of 6 filtered) + 5 gamma (6 cards, 1 duplicate link)
    CHECK(index.size() == 13);
}
