#pragma once

#include <sonohaptics/engine.hpp>
#include <sonohaptics/timbre.hpp>

#include <cstdint>
#include <memory>
#include <string>

namespace sonohaptics {

/// Newline-delimited JSON over TCP. Each connection gets its own Session and
/// engine; connections are served concurrently on separate threads.
class Server {
public:
    Server(std::shared_ptr<const Scene> scene, EngineConfig config, std::shared_ptr<const TimbreTable> timbres);
    ~Server();

    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds and listens; port 0 picks an ephemeral port. Returns the bound
    /// port. Throws IoError on bind failure.
    std::uint16_t listen(std::uint16_t port, const std::string& address = "127.0.0.1");

    /// Accepts connections until stop(). Blocks.
    void run();

    /// Closes the listener and every open connection, then joins workers.
    /// Safe to call from another thread.
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace sonohaptics
