#pragma once

#include "xxz/model.hpp"

namespace xxz {

enum class FFKind { sminus, sz, sminus_sminus, sz_sz };

struct FormFactorRequest {
  ChainParams params;
  RootSet left;   // {u_k}
  RootSet right;  // {lambda_k}
  int site = 1;   // 1-based; two-point kinds act on sites (site-1, site)
  FFKind kind = FFKind::sminus;
};

/// S_N = |P| / |V(theta)| for arbitrary {u}, {lambda}; P_{ij} is the
/// h-sum of tau terms times e^{2(theta_i - eta h)(j-1)}.
Complex scalar_product_offshell(const ChainParams& p, const RootSet& uroots,
                                const RootSet& lroots);

/// |P^NL| / |V| with the left set {u} on shell; the right variant swaps
/// the roles of the two sets.
Complex scalar_product_onshell_left(const ChainParams& p, const RootSet& uroots,
                                    const RootSet& lroots);
Complex scalar_product_onshell_right(const ChainParams& p, const RootSet& uroots,
                                     const RootSet& lroots);

/// <Phi{u}| sigma_i^- |Phi{lambda}>
Complex ff_sigma_minus(const FormFactorRequest& req);

/// <Phi{u}| C(theta_i) |Phi{lambda}> = |F^C| / |V| (no eigenvalue prefactors).
Complex c_block_expectation(const ChainParams& p, const RootSet& uroots,
                            const RootSet& lroots, int site);

/// <Phi{u}| sigma_i^z |Phi{lambda}>. The displayed determinant carries the
/// corner entry -Lambda({lambda},theta_i); corner_uses_uroots switches to
/// the -Lambda({u},theta_i) variant that appears in the intermediate step.
Complex ff_sigma_z(const FormFactorRequest& req, bool corner_uses_uroots = false);

/// <Phi{u}| C(theta_{i-1}) C(theta_i) |Phi{lambda}> as the signed gamma_1 sum
/// over reduced |F^CC| determinants.
Complex cc_block_expectation(const ChainParams& p, const RootSet& uroots,
                             const RootSet& lroots, int site);

/// <Phi{u}| sigma_{i-1}^- sigma_i^- |Phi{lambda}>
Complex cf_minus_minus(const FormFactorRequest& req);

/// <Phi{u}| sigma_{i-1}^z sigma_i^z |Phi{lambda}>
Complex cf_zz(const FormFactorRequest& req);

}  // namespace xxz
