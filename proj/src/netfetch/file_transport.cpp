#include "durghotona/netfetch/file_transport.hpp"

#include <fstream>
#include <sstream>

#include "durghotona/netfetch/url.hpp"

namespace durghotona::netfetch {

HttpResponse FileTransport::get(const std::string& url, const std::string& user_agent,
                                std::chrono::milliseconds timeout) {
    (void)user_agent;
    (void)timeout;
    auto parsed = Url::parse(url);
    if (!parsed) throw TransportError("unparseable URL: " + url);

    std::string path = parsed->path;
    if (path.back() == '/') path += "index.html";
    std::filesystem::path file = root_ / parsed->host / path.substr(1);

    std::error_code ec;
    if (!std::filesystem::is_regular_file(file, ec)) {
        return {404, "not found: " + file.string()};
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw TransportError("cannot open " + file.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return {200, buffer.str()};
}

}  // namespace durghotona::netfetch
