#ifndef WCP_WCP_HPP
#define WCP_WCP_HPP

#include <wcp/error.hpp>
#include <wcp/scalar.hpp>
#include <wcp/mat.hpp>
#include <wcp/fdvect.hpp>
#include <wcp/report.hpp>
#include <wcp/monoid.hpp>
#include <wcp/wcp_core.hpp>
#include <wcp/preunit.hpp>
#include <wcp/iterate.hpp>
#include <wcp/iso3.hpp>
#include <wcp/laws.hpp>
#include <wcp/miner.hpp>
#include <wcp/fixtures.hpp>
#include <wcp/json_io.hpp>

#endif
