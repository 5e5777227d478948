"""
YAML Parser Utility for semidecomp

This module provides utility functions for parsing and validating the YAML
claim files that make up the reproduction table.
"""

import os
import logging
import yaml
from typing import Any, Dict, List, Optional

import config

# Set up logging
logger = logging.getLogger("semidecomp.yaml_parser")


def load_yaml_file(filepath: str) -> Optional[Any]:
    """Load a YAML file and return its contents.

    Args:
        filepath: Path to the YAML file

    Returns:
        Parsed YAML contents or None if loading failed
    """
    try:
        with open(filepath, 'r', encoding='utf-8') as file:
            data = yaml.safe_load(file)
        return data
    except (OSError, yaml.YAMLError) as e:
        logger.error(f"Error loading YAML file {filepath}: {e}")
        return None


def validate_claim(source: str, claim: Any) -> bool:
    """Validate one claim entry.

    Args:
        source: File name the claim came from, for log messages
        claim: The parsed claim

    Returns:
        True if valid, False otherwise
    """
    if not isinstance(claim, dict):
        logger.error(f"Claim in {source} is not a mapping: {claim!r}")
        return False

    # Check required fields
    for field in config.REQUIRED_CLAIM_FIELDS:
        if field not in claim:
            logger.error(f"Claim {claim.get('id', '?')} in {source} missing required field: {field}")
            return False

    if claim['kind'] not in config.CLAIM_KINDS:
        logger.error(f"Claim {claim['id']} in {source} has unknown kind: {claim['kind']}")
        return False

    if not isinstance(claim['params'], dict):
        logger.error(f"Claim {claim['id']} in {source} has non-mapping params")
        return False

    return True


def get_all_claim_files(claims_dir: Optional[str] = None) -> List[str]:
    """Get all claim YAML files, sorted by name.

    Args:
        claims_dir: Directory to scan (defaults to config.CLAIMS_DIR)

    Returns:
        List of claim file paths
    """
    directory = claims_dir or config.CLAIMS_DIR
    try:
        files = sorted(
            os.path.join(directory, f)
            for f in os.listdir(directory)
            if f.endswith('.yml') or f.endswith('.yaml')
        )
        return files
    except FileNotFoundError:
        logger.error(f"Claims directory not found: {directory}")
        return []


def load_all_claims(claims_dir: Optional[str] = None) -> List[Dict[str, Any]]:
    """Load every valid claim, in file order then file position.

    Each file holds a list of claims under a top-level 'claims' key.
    Invalid claims are logged and skipped; duplicate ids keep the first.

    Args:
        claims_dir: Directory to scan (defaults to config.CLAIMS_DIR)

    Returns:
        List of claim dictionaries
    """
    claims = []
    seen = set()

    for filepath in get_all_claim_files(claims_dir):
        filename = os.path.basename(filepath)
        data = load_yaml_file(filepath)
        if not isinstance(data, dict) or not isinstance(data.get('claims'), list):
            logger.error(f"Claim file {filename} has no 'claims' list")
            continue

        for claim in data['claims']:
            if not validate_claim(filename, claim):
                continue
            if claim['id'] in seen:
                logger.warning(f"Duplicate claim id {claim['id']} in {filename}; skipped")
                continue
            seen.add(claim['id'])
            claims.append(claim)

    logger.info(f"Loaded {len(claims)} claims")
    return claims
