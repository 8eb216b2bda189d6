"""Lineup matchup-network embedding and outcome prediction."""

from linnet._core import (
    APMRatings,
    BTModel,
    BTSample,
    EmbedConfig,
    Embedding,
    Lineup,
    MatchupNetwork,
    MatchupRecord,
    PageRankScores,
    PipelineConfig,
    SeasonDataset,
    SplitSpec,
    SynthConfig,
    SynthResult,
    WalkConfig,
    bt_predict,
    build_network,
    compute_apm,
    evaluate_json,
    fit_bt,
    generate_season,
    generate_walks,
    impute_unseen,
    ingest_csv,
    pagerank,
    player_overlap,
    rate_teams,
    train_embedding,
)

__all__ = [
    "APMRatings",
    "BTModel",
    "BTSample",
    "EmbedConfig",
    "Embedding",
    "Lineup",
    "MatchupNetwork",
    "MatchupRecord",
    "PageRankScores",
    "PipelineConfig",
    "SeasonDataset",
    "SplitSpec",
    "SynthConfig",
    "SynthResult",
    "WalkConfig",
    "bt_predict",
    "build_network",
    "compute_apm",
    "evaluate_json",
    "fit_bt",
    "generate_season",
    "generate_walks",
    "impute_unseen",
    "ingest_csv",
    "pagerank",
    "player_overlap",
    "rate_teams",
    "train_embedding",
]
