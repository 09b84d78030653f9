"""
@file: __init__.py
@description: Инициализация пакета сервисов
@dependencies: mutvis.core.services
@created: 2026-10-18
"""

from .certificate_service import CertificateService, certificate_service

__all__ = [
    "CertificateService",
    "certificate_service",
]
