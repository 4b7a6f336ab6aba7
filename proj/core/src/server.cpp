#include <sonohaptics/server.hpp>

#include <sonohaptics/error.hpp>
#include <sonohaptics/protocol.hpp>

#include <boost/asio.hpp>

#include <atomic>
#include <list>
#include <mutex>
#include <thread>

namespace sonohaptics {

namespace asio = boost::asio;
using tcp = asio::ip::tcp;

namespace {

constexpr std::size_t kMaxLineBytes = 1 << 20;

} // namespace

struct Server::Impl {
    std::shared_ptr<const Scene> scene;
    EngineConfig config;
    std::shared_ptr<const TimbreTable> timbres;

    asio::io_context io;
    tcp::acceptor acceptor{io};
    std::atomic<bool> stopping{false};

    std::mutex mutex;
    std::list<std::shared_ptr<tcp::socket>> sockets;
    std::list<std::thread> workers;

    void serve(std::shared_ptr<tcp::socket> socket)
    {
        boost::system::error_code ec;
        Session session(scene, config, timbres);
        asio::streambuf buffer(kMaxLineBytes);
        for (;;) {
            asio::read_until(*socket, buffer, '\n', ec);
            if (ec)
                break;
            std::istream is(&buffer);
            std::string line;
            std::getline(is, line);
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos)
                continue;

            std::string reply;
            for (const auto& msg : session.handle_line(line)) {
                reply += msg.dump();
                reply += '\n';
            }
            if (!reply.empty()) {
                asio::write(*socket, asio::buffer(reply), ec);
                if (ec)
                    break;
            }
        }
        socket->close(ec);

        std::lock_guard lock(mutex);
        sockets.remove(socket);
    }
};

Server::Server(std::shared_ptr<const Scene> scene, EngineConfig config, std::shared_ptr<const TimbreTable> timbres)
    : impl_(std::make_unique<Impl>())
{
    impl_->scene = std::move(scene);
    impl_->config = config;
    impl_->timbres = timbres ? std::move(timbres) : std::make_shared<const TimbreTable>();
    // Fail at startup rather than on the first connection.
    Engine probe(impl_->scene, impl_->config);
}

Server::~Server()
{
    stop();
}

std::uint16_t Server::listen(std::uint16_t port, const std::string& address)
{
    boost::system::error_code ec;
    const auto addr = asio::ip::make_address(address, ec);
    if (ec)
        throw IoError("invalid listen address '" + address + "'");
    const tcp::endpoint endpoint(addr, port);
    impl_->acceptor.open(endpoint.protocol(), ec);
    if (!ec)
        impl_->acceptor.set_option(tcp::acceptor::reuse_address(true), ec);
    if (!ec)
        impl_->acceptor.bind(endpoint, ec);
    if (!ec)
        impl_->acceptor.listen(asio::socket_base::max_listen_connections, ec);
    if (ec)
        throw IoError("cannot listen on " + address + ":" + std::to_string(port) + ": " + ec.message());
    return impl_->acceptor.local_endpoint().port();
}

void Server::run()
{
    while (!impl_->stopping) {
        auto socket = std::make_shared<tcp::socket>(impl_->io);
        boost::system::error_code ec;
        impl_->acceptor.accept(*socket, ec);
        if (ec) {
            if (impl_->stopping || !impl_->acceptor.is_open())
                break;
            continue;
        }
        socket->set_option(tcp::no_delay(true), ec);
        std::lock_guard lock(impl_->mutex);
        if (impl_->stopping) {
            socket->close(ec);
            break;
        }
        impl_->sockets.push_back(socket);
        impl_->workers.emplace_back([impl = impl_.get(), socket] { impl->serve(socket); });
    }
    boost::system::error_code ec;
    impl_->acceptor.close(ec);
}

void Server::stop()
{
    if (!impl_ || impl_->stopping.exchange(true))
        return;
    boost::system::error_code ec;
    // shutdown() wakes a thread blocked in accept(); close() alone may not.
    // run() closes the acceptor once accept() returns.
    if (impl_->acceptor.is_open())
        ::shutdown(impl_->acceptor.native_handle(), SHUT_RDWR);

    std::list<std::thread> workers;
    {
        std::lock_guard lock(impl_->mutex);
        for (auto& s : impl_->sockets)
            s->shutdown(tcp::socket::shutdown_both, ec);
        workers.swap(impl_->workers);
    }
    for (auto& w : workers) {
        if (w.joinable())
            w.join();
    }
}

} // namespace sonohaptics
