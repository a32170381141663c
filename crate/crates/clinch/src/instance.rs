//! Auction inputs: agents with values, budgets, and interest sets over a
//! universe of items.
//!
//! Agent and item ids are 1-based dense integers. External labels are mapped
//! onto them at the I/O boundary, which keeps the engine's indexing aligned
//! with per-agent vectors.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::rational::Rational;

/// 1-based agent index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct AgentId(pub u32);

/// 1-based item index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ItemId(pub u32);

impl AgentId {
    /// Zero-based position for vector indexing.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub fn from_index(i: usize) -> Self {
        AgentId(i as u32 + 1)
    }
}

impl ItemId {
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    pub fn from_index(i: usize) -> Self {
        ItemId(i as u32 + 1)
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for ItemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One bidder: a single per-item value over a public interest set, with a
/// public budget.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AgentSpec {
    pub id: AgentId,
    /// Value for any item in the interest set; must be positive.
    pub value: Rational,
    /// Initial budget; total payments may never exceed it.
    pub budget: Rational,
    /// Items this agent can receive. May be empty (the agent is inert).
    pub interests: BTreeSet<ItemId>,
}

/// A complete auction input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Instance {
    pub items: Vec<ItemId>,
    pub agents: Vec<AgentSpec>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValidationIssue {
    /// No agent is interested in this item, so it could never be sold.
    UncoveredItem(ItemId),
    NonPositiveValue(AgentId),
    NegativeBudget(AgentId),
    DuplicateAgentId(AgentId),
    DuplicateItemId(ItemId),
    /// Agent ids must be exactly 1..=n in order.
    NonDenseAgentIds,
    /// Item ids must be exactly 1..=m in order.
    NonDenseItemIds,
    /// An interest set references an item outside the universe.
    UnknownInterest { agent: AgentId, item: ItemId },
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::UncoveredItem(t) => {
                write!(f, "item {t} is in no agent's interest set")
            }
            ValidationIssue::NonPositiveValue(a) => {
                write!(f, "agent {a} has a non-positive value")
            }
            ValidationIssue::NegativeBudget(a) => write!(f, "agent {a} has a negative budget"),
            ValidationIssue::DuplicateAgentId(a) => write!(f, "duplicate agent id {a}"),
            ValidationIssue::DuplicateItemId(t) => write!(f, "duplicate item id {t}"),
            ValidationIssue::NonDenseAgentIds => write!(f, "agent ids are not dense 1..=n"),
            ValidationIssue::NonDenseItemIds => write!(f, "item ids are not dense 1..=m"),
            ValidationIssue::UnknownInterest { agent, item } => {
                write!(f, "agent {agent} is interested in unknown item {item}")
            }
        }
    }
}

/// All invariant violations found in an instance, one entry per offender.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, issue) in self.issues.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{issue}")?;
        }
        Ok(())
    }
}

impl Instance {
    /// Builds an instance with dense ids from `(value, budget, interests)`
    /// triples; interests are given as 1-based item numbers.
    pub fn new(num_items: u32, agents: Vec<(Rational, Rational, Vec<u32>)>) -> Self {
        let items = (1..=num_items).map(ItemId).collect();
        let agents = agents
            .into_iter()
            .enumerate()
            .map(|(i, (value, budget, interests))| AgentSpec {
                id: AgentId(i as u32 + 1),
                value,
                budget,
                interests: interests.into_iter().map(ItemId).collect(),
            })
            .collect();
        Instance { items, agents }
    }

    pub fn num_items(&self) -> usize {
        self.items.len()
    }

    pub fn num_agents(&self) -> usize {
        self.agents.len()
    }

    pub fn agent(&self, id: AgentId) -> &AgentSpec {
        &self.agents[id.index()]
    }

    pub fn agent_ids(&self) -> impl Iterator<Item = AgentId> + '_ {
        (1..=self.agents.len() as u32).map(AgentId)
    }

    pub fn item_ids(&self) -> impl Iterator<Item = ItemId> + '_ {
        (1..=self.items.len() as u32).map(ItemId)
    }

    /// Checks every instance invariant and reports each violation with the
    /// offending id.
    pub fn validate(&self) -> Result<(), ValidationReport> {
        let mut issues = Vec::new();

        let mut seen_items = BTreeSet::new();
        for &item in &self.items {
            if !seen_items.insert(item) {
                issues.push(ValidationIssue::DuplicateItemId(item));
            }
        }
        let dense_items = self
            .items
            .iter()
            .enumerate()
            .all(|(i, t)| t.0 == i as u32 + 1);
        if !dense_items {
            issues.push(ValidationIssue::NonDenseItemIds);
        }

        let mut seen_agents = BTreeSet::new();
        for agent in &self.agents {
            if !seen_agents.insert(agent.id) {
                issues.push(ValidationIssue::DuplicateAgentId(agent.id));
            }
        }
        let dense_agents = self
            .agents
            .iter()
            .enumerate()
            .all(|(i, a)| a.id.0 == i as u32 + 1);
        if !dense_agents {
            issues.push(ValidationIssue::NonDenseAgentIds);
        }

        for agent in &self.agents {
            if !agent.value.is_positive() {
                issues.push(ValidationIssue::NonPositiveValue(agent.id));
            }
            if agent.budget.is_negative() {
                issues.push(ValidationIssue::NegativeBudget(agent.id));
            }
            for &item in &agent.interests {
                if !seen_items.contains(&item) {
                    issues.push(ValidationIssue::UnknownInterest {
                        agent: agent.id,
                        item,
                    });
                }
            }
        }

        for &item in &self.items {
            let covered = self.agents.iter().any(|a| a.interests.contains(&item));
            if !covered {
                issues.push(ValidationIssue::UncoveredItem(item));
            }
        }

        if issues.is_empty() {
            Ok(())
        } else {
            Err(ValidationReport { issues })
        }
    }
}
