/*
   Copyright 2026 The trignum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "trignum/errors.hpp"
#include "trignum/oeis.hpp"

namespace trignum {

namespace {

class HttpsTransport final : public Transport {
   public:
    std::string get(const std::string& host, const std::string& path) override {
        httplib::SSLClient cli(host);
        cli.set_connection_timeout(10);
        cli.set_read_timeout(30);
        cli.set_follow_location(true);
        auto res = cli.Get(path);
        if (!res) throw NetworkError("GET https://" + host + path + ": " + httplib::to_string(res.error()));
        if (res->status != 200)
            throw NetworkError("GET https://" + host + path + ": HTTP " + std::to_string(res->status));
        return res->body;
    }
};

}  // namespace

std::unique_ptr<Transport> make_https_transport() { return std::make_unique<HttpsTransport>(); }

}  // namespace trignum
