//! The sixteen built-in climate transition risks.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RiskType {
    Regulatory,
    Technological,
    Market,
    Reputational,
}

impl RiskType {
    pub const ALL: [RiskType; 4] = [
        RiskType::Regulatory,
        RiskType::Technological,
        RiskType::Market,
        RiskType::Reputational,
    ];

    /// Questionnaire section holding this type's ratings (2..=5).
    pub fn section(self) -> u8 {
        match self {
            RiskType::Regulatory => 2,
            RiskType::Technological => 3,
            RiskType::Market => 4,
            RiskType::Reputational => 5,
        }
    }
}

impl fmt::Display for RiskType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RiskDescriptor {
    pub code: &'static str,
    pub risk_type: RiskType,
    pub name: &'static str,
    pub description: &'static str,
}

const fn risk(
    code: &'static str,
    risk_type: RiskType,
    name: &'static str,
    description: &'static str,
) -> RiskDescriptor {
    RiskDescriptor {
        code,
        risk_type,
        name,
        description,
    }
}

use RiskType::*;

/// Registry order is also the row order of every decision matrix.
pub const RISKS: [RiskDescriptor; 16] = [
    risk("Rreg1", Regulatory, "Cap and Trade Schemes",
        "Emission trading systems with pre-established caps are systems in which companies can trade their emissions"),
    risk("Rreg2", Regulatory, "Carbon tax increase",
        "Regulatory strategy to reduce greenhouse gas emissions from companies"),
    risk("Rreg3", Regulatory, "Climate change-related litigation",
        "Legal risks for non-compliance with climate change-related responsibilities, including harm to individuals or the environment"),
    risk("Rreg4", Regulatory, "Obligation to report emissions",
        "Companies are obliged to disclose the greenhouse gas emissions they produce to comply with general regulations or identify any excess emissions"),
    risk("RT1", Technological, "Shift to less carbon-intensive production or consumption patterns",
        "Use of fuels with lower greenhouse gas emission factors for thermal energy generation"),
    risk("RT2", Technological, "Technological progress in renewable energies and energy efficiency",
        "Investments in products, processes, or services aimed at reducing carbon footprint and improving environmental conditions, but that do not meet expectations"),
    risk("RT3", Technological, "Technological change (development of new technology)",
        "New technological advancements that enable improved outcomes in the company's energy processes"),
    risk("RT4", Technological, "Failed investments in new technologies to reduce emissions",
        "Development of new technologies with a less harmful impact on climate or the environment, rendering them obsolete or uncompetitive (stranded assets)"),
    risk("RM1", Market, "Change in the demand for products and services",
        "Changes in the demand for products and services driven by concerns about climate change"),
    risk("RM2", Market, "Raw materials and supplies (price volatility and availability)",
        "Changes in prices, demand, volatility, and other aspects related to climate change that impact the supply of raw materials"),
    risk("RM3", Market, "Stakeholder concerns on climate change",
        "Concern among market stakeholders and/or other affected government and social groups, creating uncertainty"),
    risk("RM4", Market, "Poor adaptation to change in customers' behavior",
        "Limited adaptability of business models to the changing needs, desires, and customer behaviors regarding climate change"),
    risk("Rrep1", Reputational, "Changes in customers preferences",
        "Reputation risk from loss or change in preference for a company's product"),
    risk("Rrep2", Reputational, "Increasing pressure from non-governmental organisations",
        "Pressures exerted by non-governmental organisations on companies' actions with environmental impact, generate media attention and cause reputational harm"),
    risk("Rrep3", Reputational, "Negative news and comments / information about the company",
        "News on environmental responsibility enhance shareholder value, while negative ones can have a deleterious impact on it"),
    risk("Rrep4", Reputational, "Changes in market sentiment due to potential future climate risks",
        "Shifts in sentiment due to awareness of climate issues that the future may hold if we cannot react promptly"),
];

/// The five assessment criteria, in questionnaire order.
pub const CRITERIA: [&str; 5] = ["Vulnerability", "Resilience", "Exposure", "Likelihood", "Impact"];

pub const LIKELIHOOD_CRITERION: usize = 3;
pub const IMPACT_CRITERION: usize = 4;

pub fn risk_codes() -> Vec<String> {
    RISKS.iter().map(|r| r.code.to_string()).collect()
}

pub fn risk_index(code: &str) -> Option<usize> {
    RISKS.iter().position(|r| r.code == code)
}

pub fn lookup(code: &str) -> Option<&'static RiskDescriptor> {
    RISKS.iter().find(|r| r.code == code)
}

pub fn criterion_index(name: &str) -> Option<usize> {
    CRITERIA.iter().position(|c| *c == name)
}
